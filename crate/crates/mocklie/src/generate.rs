//! Seeded instance generators for property tests.
//!
//! Valid mock-Lie algebras are sampled from the central square-zero family
//! (see [`crate::algebra::random_central_extension`]); arbitrary random
//! constants essentially never satisfy the Jacobi identity.  The same
//! family, without the symmetry requirement, is anti-associative and hence
//! yields valid mock-pre-Lie instances.  O-operators come from the identity
//! map over a sub-adjacent representation, the zero map, and filtered
//! rational perturbations of those.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{random_central_extension, MockLieAlgebra, StructureConstants};
use crate::matrix::Matrix;
use crate::prelie::{check_o_operator, MockPreLieAlgebra, OOperator};
use crate::rep::Representation;
use crate::scalar::{rat, Scalar};
use crate::tensor::Tensor2;
use crate::ybe::RTensor;

fn small_rational(rng: &mut ChaCha8Rng) -> Scalar {
    let num = rng.gen_range(-3i64..=3);
    let den = rng.gen_range(1i64..=2);
    rat(num, den)
}

/// A dense random square 2-tensor with small rational entries.
pub fn random_tensor2(dim: usize, seed: u64) -> Tensor2 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tensor2::zeros(dim, dim);
    for i in 0..dim {
        for j in 0..dim {
            t.set(i, j, small_rational(&mut rng));
        }
    }
    t
}

/// A random skew-symmetric square 2-tensor.
pub fn random_skew_tensor2(dim: usize, seed: u64) -> Tensor2 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tensor2::zeros(dim, dim);
    for i in 0..dim {
        for j in (i + 1)..dim {
            let c = small_rational(&mut rng);
            t.set(i, j, c.clone());
            t.set(j, i, -c);
        }
    }
    t
}

pub fn random_r(algebra: MockLieAlgebra, seed: u64) -> RTensor {
    let dim = algebra.dim();
    RTensor::new(algebra, random_tensor2(dim, seed)).expect("dims match by construction")
}

pub fn random_skew_r(algebra: MockLieAlgebra, seed: u64) -> RTensor {
    let dim = algebra.dim();
    RTensor::new(algebra, random_skew_tensor2(dim, seed)).expect("dims match by construction")
}

/// A random mock-pre-Lie algebra: an arbitrary (not necessarily symmetric)
/// bilinear map V × V → W with all other products zero.  Such a product is
/// anti-associative, so the pre-Lie identity holds trivially.
pub fn random_prelie_central(dim_v: usize, dim_w: usize, seed: u64) -> MockPreLieAlgebra {
    let dim = dim_v + dim_w;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sc = StructureConstants::zeros(dim);
    for i in 0..dim_v {
        for j in 0..dim_v {
            for k in 0..dim_w {
                sc.set(i, j, dim_v + k, small_rational(&mut rng));
            }
        }
    }
    MockPreLieAlgebra::new(sc).expect("central square-zero products are anti-associative")
}

/// A random valid representation, drawn from the adjoint, coadjoint,
/// sub-adjacent and zero-action families over generated algebras.
pub fn random_representation(seed: u64) -> Representation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dim_v = rng.gen_range(1usize..=2);
    let dim_w = rng.gen_range(1usize..=2);
    match seed % 4 {
        0 => random_central_extension(dim_v, dim_w, seed.wrapping_add(1)).adjoint_rep(),
        1 => random_central_extension(dim_v, dim_w, seed.wrapping_add(1))
            .adjoint_rep()
            .dual(),
        2 => {
            let p = random_prelie_central(dim_v, dim_w, seed.wrapping_add(1));
            p.sub_adjacent().1
        }
        _ => {
            let a = random_central_extension(dim_v, dim_w, seed.wrapping_add(1));
            let module_dim = rng.gen_range(1usize..=3);
            Representation::new(a.clone(), vec![Matrix::zeros(module_dim, module_dim); a.dim()])
                .expect("zero action always represents")
        }
    }
}

/// A random valid O-operator: the identity over a sub-adjacent
/// representation, a zero map, a rational multiple of the identity, or a
/// perturbation of one of those that happens to pass the check.
pub fn random_o_operator(seed: u64) -> OOperator {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dim_v = rng.gen_range(1usize..=2);
    let dim_w = rng.gen_range(1usize..=2);
    let (rep, base) = match seed % 3 {
        0 => {
            let p = random_prelie_central(dim_v, dim_w, seed.wrapping_add(1));
            let (_, theta) = p.sub_adjacent();
            let n = theta.module_dim();
            (theta, Matrix::identity(n))
        }
        1 => {
            let a = random_central_extension(dim_v, dim_w, seed.wrapping_add(1));
            let rep = a.adjoint_rep();
            let n = rep.module_dim();
            (rep, Matrix::zeros(a.dim(), n))
        }
        _ => {
            let p = random_prelie_central(dim_v, dim_w, seed.wrapping_add(1));
            let (_, theta) = p.sub_adjacent();
            let n = theta.module_dim();
            let scale = small_rational(&mut rng);
            (theta, Matrix::identity(n).scale(&scale))
        }
    };
    // try a sparse rational perturbation, keep it only if still valid
    let mut candidate = base.clone();
    let i = rng.gen_range(0..candidate.rows());
    let j = rng.gen_range(0..candidate.cols());
    let bump = candidate.get(i, j) + small_rational(&mut rng);
    candidate.set(i, j, bump);
    let chosen = match check_o_operator(&rep, &candidate) {
        Ok(report) if report.valid => candidate,
        _ => base,
    };
    OOperator::new(rep, chosen).expect("generator output re-checked by the validator")
}
