//! Cobrackets, dual products, mock-Lie bialgebras, matched pairs,
//! bicrossed products, Manin triples and the double construction.
//!
//! The dual space A* is always materialized in the basis dual to A's, so
//! the pairing is the dot product: the adjoint of a cobracket Δ is read off
//! coefficientwise as a product on A*, coadjoint actions are transposes,
//! and the standard form on A ⊕ A* has the block-hyperbolic Gram matrix.

use num_traits::Zero;

use crate::algebra::{validate_mock_lie, MockLieAlgebra, StructureConstants};
use crate::error::Error;
use crate::matrix::Matrix;
use crate::rep::{BilinearForm, Representation};
use crate::scalar::{int, Scalar};
use crate::tensor::{FactorMap, Tensor2};

/// A linear map Δ: A → A⊗A stored per basis vector.
///
/// Symmetry, co-Jacobi and cocycle compatibility are checked properties,
/// not construction invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cobracket {
    algebra: MockLieAlgebra,
    images: Vec<Tensor2>,
}

impl Cobracket {
    pub fn new(algebra: MockLieAlgebra, images: Vec<Tensor2>) -> Result<Self, Error> {
        let n = algebra.dim();
        if images.len() != n {
            return Err(Error::Shape(format!(
                "{} cobracket images for a dim-{n} algebra",
                images.len()
            )));
        }
        if images.iter().any(|t| t.dims() != (n, n)) {
            return Err(Error::Shape("cobracket images must live in A⊗A".into()));
        }
        Ok(Self { algebra, images })
    }

    pub fn zero(algebra: MockLieAlgebra) -> Self {
        let n = algebra.dim();
        let images = vec![Tensor2::zeros(n, n); n];
        Self { algebra, images }
    }

    pub fn algebra(&self) -> &MockLieAlgebra {
        &self.algebra
    }

    pub fn image(&self, i: usize) -> &Tensor2 {
        &self.images[i]
    }

    pub fn images(&self) -> &[Tensor2] {
        &self.images
    }

    /// Δ(x) by linear extension.
    pub fn apply(&self, x: &[Scalar]) -> Result<Tensor2, Error> {
        let n = self.algebra.dim();
        if x.len() != n {
            return Err(Error::DimMismatch(format!(
                "element of length {} in a dim-{n} algebra",
                x.len()
            )));
        }
        let mut out = Tensor2::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                out = out.add(&self.images[i].scale(xi))?;
            }
        }
        Ok(out)
    }

    pub fn is_symmetric(&self) -> bool {
        self.images.iter().all(Tensor2::is_symmetric)
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(Tensor2::is_zero)
    }
}

/// Structure constants of the product ⋄ on A* adjoint to Δ:
/// `f_j ⋄ f_k = Σ_i Δ(e_i)[j,k] f_i`.
pub fn dual_structure(d: &Cobracket) -> StructureConstants {
    let n = d.algebra().dim();
    let mut sc = StructureConstants::zeros(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let c = d.image(i).get(j, k);
                if !c.is_zero() {
                    sc.set(j, k, i, c.clone());
                }
            }
        }
    }
    sc
}

/// The dual product as a validated algebra, when it is one.
pub fn dual_algebra(d: &Cobracket) -> Result<MockLieAlgebra, Error> {
    let names = (1..=d.algebra().dim()).map(|i| format!("f{i}")).collect();
    MockLieAlgebra::with_basis_names(dual_structure(d), Some(names))
}

/// The multiplication of A read as a cobracket on A*:
/// γ(f_i) = Σ_{j,k} C^i_{jk} f_j ⊗ f_k.
pub fn gamma_images(a: &MockLieAlgebra) -> Vec<Tensor2> {
    let n = a.dim();
    (0..n)
        .map(|i| {
            let mut t = Tensor2::zeros(n, n);
            for j in 0..n {
                for k in 0..n {
                    let c = a.structure().get(j, k, i);
                    if !c.is_zero() {
                        t.set(j, k, c.clone());
                    }
                }
            }
            t
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocycleReport {
    pub compatible: bool,
    pub first_violation: Option<CocycleViolation>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocycleViolation {
    pub pair: [usize; 2],
    pub residual: Tensor2,
}

/// Checks the cocycle compatibility of Δ with the product on all basis
/// pairs:
/// `Δ(x∘y) + (L(x)⊗id + id⊗L(x))Δ(y) + (L(y)⊗id + id⊗L(y))Δ(x) = 0`.
pub fn check_cocycle_compatibility(d: &Cobracket) -> CocycleReport {
    let a = d.algebra();
    let n = a.dim();
    let left_muls: Vec<Matrix> = (0..n).map(|i| a.left_mul_matrix(i)).collect();
    for i in 0..n {
        for j in 0..n {
            let mut residual = Tensor2::zeros(n, n);
            for (k, c) in a.multiply_basis(i, j).iter().enumerate() {
                if !c.is_zero() {
                    residual = residual.add(&d.image(k).scale(c)).expect("square");
                }
            }
            for (x, y) in [(i, j), (j, i)] {
                let lx = FactorMap::Map(&left_muls[x]);
                let adj = d
                    .image(y)
                    .apply_factorwise(lx, FactorMap::Identity)
                    .expect("square")
                    .add(
                        &d.image(y)
                            .apply_factorwise(FactorMap::Identity, lx)
                            .expect("square"),
                    )
                    .expect("square");
                residual = residual.add(&adj).expect("square");
            }
            if !residual.is_zero() {
                return CocycleReport {
                    compatible: false,
                    first_violation: Some(CocycleViolation {
                        pair: [i, j],
                        residual,
                    }),
                };
            }
        }
    }
    CocycleReport {
        compatible: true,
        first_violation: None,
    }
}

/// The three defining properties of a mock-Lie bialgebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BialgebraReport {
    /// τΔ = Δ, equivalently the dual product is commutative.
    pub symmetric: bool,
    /// The dual product satisfies the Jacobi identity.
    pub dual_jacobi: bool,
    /// Δ is a cocycle for the adjoint action.
    pub compatible: bool,
}

impl BialgebraReport {
    pub fn bialgebra(&self) -> bool {
        self.symmetric && self.dual_jacobi && self.compatible
    }
}

pub fn validate_bialgebra(d: &Cobracket) -> BialgebraReport {
    let dual = validate_mock_lie(&dual_structure(d));
    BialgebraReport {
        symmetric: d.is_symmetric(),
        dual_jacobi: dual.jacobi,
        compatible: check_cocycle_compatibility(d).compatible,
    }
}

/// Two mock-Lie algebras with mutual actions; compatibility is a checked
/// property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchedPairData {
    pub a: MockLieAlgebra,
    pub h: MockLieAlgebra,
    /// Representation of A on H's space.
    pub rho: Representation,
    /// Representation of H on A's space.
    pub mu: Representation,
}

impl MatchedPairData {
    pub fn new(
        a: MockLieAlgebra,
        h: MockLieAlgebra,
        rho: Representation,
        mu: Representation,
    ) -> Result<Self, Error> {
        if rho.algebra() != &a || rho.module_dim() != h.dim() {
            return Err(Error::Shape("rho must represent A on H's space".into()));
        }
        if mu.algebra() != &h || mu.module_dim() != a.dim() {
            return Err(Error::Shape("mu must represent H on A's space".into()));
        }
        Ok(Self { a, h, rho, mu })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchedPairReport {
    /// Compatibility of ρ with the product of H (values in H).
    pub compat_on_h: bool,
    /// Compatibility of μ with the product of A (values in A).
    pub compat_on_a: bool,
    pub first_violation: Option<MatchedPairViolation>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchedPairViolation {
    /// Which of the two identities failed first: 0 = on H, 1 = on A.
    pub identity: usize,
    pub triple: [usize; 3],
    pub residual: Vec<Scalar>,
}

impl MatchedPairReport {
    pub fn valid(&self) -> bool {
        self.compat_on_h && self.compat_on_a
    }
}

/// Checks the two matched-pair compatibility identities on basis triples:
///
/// on H, for x ∈ A and a, b ∈ H:
///   ρ(x)(a⋄b) + ρ(x)a ⋄ b + a ⋄ ρ(x)b + ρ(μ(a)x)b + ρ(μ(b)x)a = 0;
///
/// on A, for a ∈ H and x, y ∈ A:
///   μ(a)(x∘y) + μ(a)x ∘ y + x ∘ μ(a)y + μ(ρ(x)a)y + μ(ρ(y)a)x = 0.
pub fn check_matched_pair(m: &MatchedPairData) -> MatchedPairReport {
    let na = m.a.dim();
    let nh = m.h.dim();

    let mut compat_on_h = true;
    let mut first_violation = None;

    'h_side: for x in 0..na {
        for a in 0..nh {
            for b in 0..nh {
                let mut residual = m
                    .rho
                    .matrix(x)
                    .mul_vec(m.h.multiply_basis(a, b))
                    .expect("shapes checked");
                let rho_x_a: Vec<Scalar> =
                    (0..nh).map(|r| m.rho.matrix(x).get(r, a).clone()).collect();
                let rho_x_b: Vec<Scalar> =
                    (0..nh).map(|r| m.rho.matrix(x).get(r, b).clone()).collect();
                let basis = |idx: usize| -> Vec<Scalar> {
                    let mut v = vec![Scalar::zero(); nh];
                    v[idx] = int(1);
                    v
                };
                for (r, v) in m
                    .h
                    .multiply(&rho_x_a, &basis(b))
                    .expect("shapes checked")
                    .into_iter()
                    .enumerate()
                {
                    residual[r] += v;
                }
                for (r, v) in m
                    .h
                    .multiply(&basis(a), &rho_x_b)
                    .expect("shapes checked")
                    .into_iter()
                    .enumerate()
                {
                    residual[r] += v;
                }
                let mu_a_x: Vec<Scalar> =
                    (0..na).map(|r| m.mu.matrix(a).get(r, x).clone()).collect();
                let mu_b_x: Vec<Scalar> =
                    (0..na).map(|r| m.mu.matrix(b).get(r, x).clone()).collect();
                for (r, v) in m
                    .rho
                    .apply(&mu_a_x, &basis(b))
                    .expect("shapes checked")
                    .into_iter()
                    .enumerate()
                {
                    residual[r] += v;
                }
                for (r, v) in m
                    .rho
                    .apply(&mu_b_x, &basis(a))
                    .expect("shapes checked")
                    .into_iter()
                    .enumerate()
                {
                    residual[r] += v;
                }
                if residual.iter().any(|v| !v.is_zero()) {
                    compat_on_h = false;
                    first_violation = Some(MatchedPairViolation {
                        identity: 0,
                        triple: [x, a, b],
                        residual,
                    });
                    break 'h_side;
                }
            }
        }
    }

    let mut compat_on_a = true;
    'a_side: for a in 0..nh {
        for x in 0..na {
            for y in 0..na {
                let mut residual = m
                    .mu
                    .matrix(a)
                    .mul_vec(m.a.multiply_basis(x, y))
                    .expect("shapes checked");
                let mu_a_x: Vec<Scalar> =
                    (0..na).map(|r| m.mu.matrix(a).get(r, x).clone()).collect();
                let mu_a_y: Vec<Scalar> =
                    (0..na).map(|r| m.mu.matrix(a).get(r, y).clone()).collect();
                let basis = |idx: usize| -> Vec<Scalar> {
                    let mut v = vec![Scalar::zero(); na];
                    v[idx] = int(1);
                    v
                };
                for (r, v) in m
                    .a
                    .multiply(&mu_a_x, &basis(y))
                    .expect("shapes checked")
                    .into_iter()
                    .enumerate()
                {
                    residual[r] += v;
                }
                for (r, v) in m
                    .a
                    .multiply(&basis(x), &mu_a_y)
                    .expect("shapes checked")
                    .into_iter()
                    .enumerate()
                {
                    residual[r] += v;
                }
                let rho_x_a: Vec<Scalar> =
                    (0..nh).map(|r| m.rho.matrix(x).get(r, a).clone()).collect();
                let rho_y_a: Vec<Scalar> =
                    (0..nh).map(|r| m.rho.matrix(y).get(r, a).clone()).collect();
                for (r, v) in m
                    .mu
                    .apply(&rho_x_a, &basis(y))
                    .expect("shapes checked")
                    .into_iter()
                    .enumerate()
                {
                    residual[r] += v;
                }
                for (r, v) in m
                    .mu
                    .apply(&rho_y_a, &basis(x))
                    .expect("shapes checked")
                    .into_iter()
                    .enumerate()
                {
                    residual[r] += v;
                }
                if residual.iter().any(|v| !v.is_zero()) {
                    compat_on_a = false;
                    if first_violation.is_none() {
                        first_violation = Some(MatchedPairViolation {
                            identity: 1,
                            triple: [a, x, y],
                            residual,
                        });
                    }
                    break 'a_side;
                }
            }
        }
    }

    MatchedPairReport {
        compat_on_h,
        compat_on_a,
        first_violation,
    }
}

/// Raw structure constants of the bicrossed product A ⋈ H on the basis
/// (e_1…e_n, h_1…h_m):
///
///   e_i ∘ e_j ∈ A,  h_a ∘ h_b ∈ H,  e_i ∘ h_b = μ(h_b)e_i + ρ(e_i)h_b.
pub fn bicrossed_structure(m: &MatchedPairData) -> StructureConstants {
    let na = m.a.dim();
    let nh = m.h.dim();
    let total = na + nh;
    let mut sc = StructureConstants::zeros(total);
    for i in 0..na {
        for j in 0..na {
            for (k, c) in m.a.multiply_basis(i, j).iter().enumerate() {
                if !c.is_zero() {
                    sc.set(i, j, k, c.clone());
                }
            }
        }
    }
    for a in 0..nh {
        for b in 0..nh {
            for (k, c) in m.h.multiply_basis(a, b).iter().enumerate() {
                if !c.is_zero() {
                    sc.set(na + a, na + b, na + k, c.clone());
                }
            }
        }
    }
    for i in 0..na {
        for b in 0..nh {
            for k in 0..na {
                let c = m.mu.matrix(b).get(k, i);
                if !c.is_zero() {
                    sc.set(i, na + b, k, c.clone());
                    sc.set(na + b, i, k, c.clone());
                }
            }
            for k in 0..nh {
                let c = m.rho.matrix(i).get(k, b);
                if !c.is_zero() {
                    sc.set(i, na + b, na + k, c.clone());
                    sc.set(na + b, i, na + k, c.clone());
                }
            }
        }
    }
    sc
}

/// The bicrossed product as a validated algebra; requires the matched-pair
/// compatibility, which is exactly when the product is mock-Lie.
pub fn bicrossed_product(m: &MatchedPairData) -> Result<MockLieAlgebra, Error> {
    if !check_matched_pair(m).valid() {
        return Err(Error::NotMatchedPair);
    }
    let names = m
        .a
        .basis_names()
        .iter()
        .cloned()
        .chain(m.h.basis_names().iter().cloned())
        .collect();
    MockLieAlgebra::with_basis_names(bicrossed_structure(m), Some(names))
        .map_err(|_| Error::NotMatchedPair)
}

/// A candidate Manin triple: a total algebra, a basis split, and a form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManinTripleData {
    pub total: MockLieAlgebra,
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
    pub form: BilinearForm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ManinReport {
    pub plus_subalgebra: bool,
    pub minus_subalgebra: bool,
    pub plus_isotropic: bool,
    pub minus_isotropic: bool,
    pub form_symmetric: bool,
    pub form_invariant: bool,
    pub form_nondegenerate: bool,
    /// Whether the data is in standard shape: an even split (first half,
    /// second half) with the hyperbolic pairing Gram matrix.
    pub standard: bool,
}

impl ManinReport {
    pub fn manin_triple(&self) -> bool {
        self.plus_subalgebra
            && self.minus_subalgebra
            && self.plus_isotropic
            && self.minus_isotropic
            && self.form_symmetric
            && self.form_invariant
            && self.form_nondegenerate
    }
}

/// Gram matrix of the standard pairing on A ⊕ A*:
/// ω_d(x+ξ, y+η) = ⟨x, η⟩ + ⟨ξ, y⟩.
pub fn standard_form_gram(n: usize) -> Matrix {
    let mut g = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        g.set(i, n + i, int(1));
        g.set(n + i, i, int(1));
    }
    g
}

/// Checks all Manin-triple conditions for a basis-indexed split.
pub fn check_manin_triple(m: &ManinTripleData) -> Result<ManinReport, Error> {
    let n = m.total.dim();
    let mut seen = vec![false; n];
    for &i in m.plus.iter().chain(&m.minus) {
        if i >= n || seen[i] {
            return Err(Error::Shape(
                "plus/minus indices must partition the basis".into(),
            ));
        }
        seen[i] = true;
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::Shape(
            "plus/minus indices must partition the basis".into(),
        ));
    }
    if m.form.algebra() != &m.total {
        return Err(Error::AlgebraMismatch);
    }

    let in_span = |indices: &[usize], v: &[Scalar]| -> bool {
        v.iter()
            .enumerate()
            .all(|(k, c)| c.is_zero() || indices.contains(&k))
    };
    let closed = |indices: &[usize]| -> bool {
        indices.iter().all(|&i| {
            indices
                .iter()
                .all(|&j| in_span(indices, m.total.multiply_basis(i, j)))
        })
    };
    let isotropic = |indices: &[usize]| -> bool {
        indices
            .iter()
            .all(|&i| indices.iter().all(|&j| m.form.eval_basis(i, j).is_zero()))
    };

    let inv = crate::rep::check_invariant_form(&m.form);

    let half = n / 2;
    let standard = n % 2 == 0
        && m.plus == (0..half).collect::<Vec<_>>()
        && m.minus == (half..n).collect::<Vec<_>>()
        && *m.form.gram() == standard_form_gram(half);

    Ok(ManinReport {
        plus_subalgebra: closed(&m.plus),
        minus_subalgebra: closed(&m.minus),
        plus_isotropic: isotropic(&m.plus),
        minus_isotropic: isotropic(&m.minus),
        form_symmetric: inv.symmetric,
        form_invariant: inv.invariant,
        form_nondegenerate: inv.nondegenerate,
        standard,
    })
}

/// The matched pair (A, A*; L*, 𝓛*) induced by a cobracket whose dual
/// product is mock-Lie.
pub fn standard_matched_pair(a: &MockLieAlgebra, d: &Cobracket) -> Result<MatchedPairData, Error> {
    if d.algebra() != a {
        return Err(Error::AlgebraMismatch);
    }
    let h = dual_algebra(d)?;
    let n = a.dim();
    let rho_action: Vec<Matrix> = (0..n).map(|i| a.left_mul_matrix(i).transpose()).collect();
    let rho = Representation::new(a.clone(), rho_action)
        .expect("coadjoint action of a valid algebra is a representation");
    let mu_action: Vec<Matrix> = (0..n).map(|j| h.left_mul_matrix(j).transpose()).collect();
    let mu = Representation::new(h.clone(), mu_action)
        .expect("coadjoint action of a valid algebra is a representation");
    MatchedPairData::new(a.clone(), h, rho, mu)
}

/// Builds the standard Manin triple candidate (A ⋈ A*, A, A*, ω_d) from a
/// cobracket, without requiring the matched-pair compatibility to hold.
pub fn standard_manin_data(a: &MockLieAlgebra, d: &Cobracket) -> Result<ManinTripleData, Error> {
    let mp = standard_matched_pair(a, d)?;
    let sc = bicrossed_structure(&mp);
    let report = validate_mock_lie(&sc);
    if !report.valid() {
        return Err(Error::NotMockLie {
            commutative: report.commutative,
            jacobi: report.jacobi,
        });
    }
    let names = mp
        .a
        .basis_names()
        .iter()
        .cloned()
        .chain(mp.h.basis_names().iter().cloned())
        .collect();
    let total = MockLieAlgebra::with_basis_names(sc, Some(names))?;
    let n = a.dim();
    let form = BilinearForm::new(total.clone(), standard_form_gram(n))?;
    Ok(ManinTripleData {
        total,
        plus: (0..n).collect(),
        minus: (n..2 * n).collect(),
        form,
    })
}

/// The double of a mock-Lie bialgebra.
#[derive(Debug, Clone)]
pub struct Double {
    /// D(A) = A ⋈ A*.
    pub algebra: MockLieAlgebra,
    /// The canonical element Σ_i e_i ⊗ f_i, corresponding to id: A → A.
    pub canonical_r: crate::ybe::RTensor,
    /// The coboundary cobracket of the canonical element on D(A).
    pub cobracket: Cobracket,
}

/// Builds the double D(A) = A ⋈ A* of a bialgebra together with its
/// canonical coboundary cobracket.
///
/// The returned cobracket restricts to −Δ on A and to the cobracket dual to
/// A's own product on A*; both restrictions are verified entrywise.
pub fn double(a: &MockLieAlgebra, d: &Cobracket) -> Result<Double, Error> {
    let report = validate_bialgebra(d);
    if !report.bialgebra() {
        return Err(Error::NotBialgebra {
            symmetric: report.symmetric,
            dual_jacobi: report.dual_jacobi,
            compatible: report.compatible,
        });
    }
    let mp = standard_matched_pair(a, d)?;
    let total = bicrossed_product(&mp)?;
    let n = a.dim();
    let mut r = Tensor2::zeros(2 * n, 2 * n);
    for i in 0..n {
        r.set(i, n + i, int(1));
    }
    let canonical_r = crate::ybe::RTensor::new(total.clone(), r)?;
    let cobracket = crate::ybe::coboundary_cobracket(&canonical_r);

    // restriction to A is −Δ, embedded in the A⊗A block
    for i in 0..n {
        let mut expected = Tensor2::zeros(2 * n, 2 * n);
        for j in 0..n {
            for k in 0..n {
                let c = d.image(i).get(j, k);
                if !c.is_zero() {
                    expected.set(j, k, -c.clone());
                }
            }
        }
        assert_eq!(
            cobracket.image(i),
            &expected,
            "double cobracket must restrict to the negated cobracket on A"
        );
    }
    // restriction to A* is the cobracket dual to A's product, in the
    // A*⊗A* block
    let gamma = gamma_images(a);
    for i in 0..n {
        let mut expected = Tensor2::zeros(2 * n, 2 * n);
        for j in 0..n {
            for k in 0..n {
                let c = gamma[i].get(j, k);
                if !c.is_zero() {
                    expected.set(n + j, n + k, c.clone());
                }
            }
        }
        assert_eq!(
            cobracket.image(n + i),
            &expected,
            "double cobracket must restrict to the dual-of-product cobracket on A*"
        );
    }

    Ok(Double {
        algebra: total,
        canonical_r,
        cobracket,
    })
}
