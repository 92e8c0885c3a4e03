//! Finite-dimensional mock-Lie algebras given by structure constants.
//!
//! A mock-Lie algebra is a commutative algebra whose product satisfies the
//! Jacobi identity; equivalently, every left multiplication L(x) is an
//! anti-derivation.  Values of [`MockLieAlgebra`] are validated at
//! construction, so downstream constructions may assume both axioms hold.

use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::matrix::Matrix;
use crate::rep::Representation;
use crate::scalar::{rat, Scalar};

/// A cubical array `C[i][j][k]` encoding `e_i ∘ e_j = Σ_k C^k_{ij} e_k`.
///
/// Stored flat with `k` fastest, so the product of two basis vectors is a
/// contiguous slice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    dim: usize,
    c: Vec<Scalar>,
}

impl StructureConstants {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            c: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    /// Builds from a nested `[i][j][k]` array, checking the shape.
    pub fn from_nested(nested: Vec<Vec<Vec<Scalar>>>) -> Result<Self, Error> {
        let dim = nested.len();
        let mut sc = Self::zeros(dim);
        for (i, plane) in nested.into_iter().enumerate() {
            if plane.len() != dim {
                return Err(Error::Shape(format!(
                    "structure constants not a {dim}^3 array"
                )));
            }
            for (j, row) in plane.into_iter().enumerate() {
                if row.len() != dim {
                    return Err(Error::Shape(format!(
                        "structure constants not a {dim}^3 array"
                    )));
                }
                for (k, v) in row.into_iter().enumerate() {
                    sc.set(i, j, k, v);
                }
            }
        }
        Ok(sc)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        self.c[(i * self.dim + j) * self.dim + k] = v;
    }

    /// The coefficient vector of `e_i ∘ e_j`.
    pub fn product_of_basis(&self, i: usize, j: usize) -> &[Scalar] {
        let base = (i * self.dim + j) * self.dim;
        &self.c[base..base + self.dim]
    }

    /// Bilinear extension of the product to coefficient vectors.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>, Error> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::DimMismatch(format!(
                "vectors of length {} and {} in a dim-{} algebra",
                x.len(),
                y.len(),
                self.dim
            )));
        }
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let coeff = xi * yj;
                for (k, out_k) in out.iter_mut().enumerate() {
                    let c = self.get(i, j, k);
                    if !c.is_zero() {
                        *out_k += &coeff * c;
                    }
                }
            }
        }
        Ok(out)
    }

    /// The left-multiplication matrix of `e_i`: column `j` is `e_i ∘ e_j`.
    pub fn left_mul_matrix(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |k, j| self.get(i, j, k).clone())
    }
}

/// Outcome of checking the two mock-Lie axioms on raw structure constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub commutative: bool,
    pub jacobi: bool,
    pub first_violation: Option<AxiomViolation>,
}

/// First failing basis triple in lexicographic order, with the residual
/// vector of the violated identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomViolation {
    pub triple: [usize; 3],
    pub residual: Vec<Scalar>,
}

impl AxiomReport {
    pub fn valid(&self) -> bool {
        self.commutative && self.jacobi
    }
}

/// Checks commutativity (`C^k_{ij} = C^k_{ji}`) and the Jacobi identity on
/// all basis triples; multilinearity makes the basis check sufficient.
pub fn validate_mock_lie(sc: &StructureConstants) -> AxiomReport {
    let n = sc.dim();
    let mut commutative = true;
    let mut comm_violation = None;
    'comm: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if sc.get(i, j, k) != sc.get(j, i, k) {
                    commutative = false;
                    let mut residual = vec![Scalar::zero(); n];
                    for (r, res) in residual.iter_mut().enumerate() {
                        *res = sc.get(i, j, r) - sc.get(j, i, r);
                    }
                    comm_violation = Some(AxiomViolation {
                        triple: [i, j, k],
                        residual,
                    });
                    break 'comm;
                }
            }
        }
    }

    let mut jacobi = true;
    let mut jac_violation = None;
    'jac: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let residual = jacobiator(sc, i, j, k);
                if residual.iter().any(|v| !v.is_zero()) {
                    jacobi = false;
                    jac_violation = Some(AxiomViolation {
                        triple: [i, j, k],
                        residual,
                    });
                    break 'jac;
                }
            }
        }
    }

    let first_violation = comm_violation.or(jac_violation);
    AxiomReport {
        commutative,
        jacobi,
        first_violation,
    }
}

/// `e_i ∘ (e_j ∘ e_k) + e_j ∘ (e_k ∘ e_i) + e_k ∘ (e_i ∘ e_j)`.
fn jacobiator(sc: &StructureConstants, i: usize, j: usize, k: usize) -> Vec<Scalar> {
    let n = sc.dim();
    let mut out = vec![Scalar::zero(); n];
    let acc = |outer: usize, inner: &[Scalar], out: &mut Vec<Scalar>| {
        for (m, c) in inner.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let prod = sc.product_of_basis(outer, m);
            for (r, p) in prod.iter().enumerate() {
                if !p.is_zero() {
                    out[r] += c * p;
                }
            }
        }
    };
    acc(i, sc.product_of_basis(j, k), &mut out);
    acc(j, sc.product_of_basis(k, i), &mut out);
    acc(k, sc.product_of_basis(i, j), &mut out);
    out
}

/// A validated mock-Lie algebra.  Cannot be constructed in an invalid state.
#[derive(Debug, Clone)]
pub struct MockLieAlgebra {
    structure: StructureConstants,
    basis_names: Vec<String>,
}

impl PartialEq for MockLieAlgebra {
    /// Structural equality of the constants; basis labels are cosmetic.
    fn eq(&self, other: &Self) -> bool {
        self.structure == other.structure
    }
}

impl Eq for MockLieAlgebra {}

impl MockLieAlgebra {
    /// Validates the axioms and wraps the constants.
    pub fn new(structure: StructureConstants) -> Result<Self, Error> {
        Self::with_basis_names(structure, None)
    }

    pub fn with_basis_names(
        structure: StructureConstants,
        names: Option<Vec<String>>,
    ) -> Result<Self, Error> {
        let report = validate_mock_lie(&structure);
        if !report.valid() {
            return Err(Error::NotMockLie {
                commutative: report.commutative,
                jacobi: report.jacobi,
            });
        }
        let dim = structure.dim();
        let basis_names = match names {
            Some(names) => {
                if names.len() != dim {
                    return Err(Error::Shape(format!(
                        "{} basis names for a dim-{dim} algebra",
                        names.len()
                    )));
                }
                names
            }
            None => default_names(dim),
        };
        Ok(Self {
            structure,
            basis_names,
        })
    }

    pub fn abelian(dim: usize) -> Self {
        Self {
            structure: StructureConstants::zeros(dim),
            basis_names: default_names(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.structure.dim()
    }

    pub fn structure(&self) -> &StructureConstants {
        &self.structure
    }

    pub fn basis_name(&self, i: usize) -> &str {
        &self.basis_names[i]
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    /// Coefficient vector of the `i`-th basis element.
    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim()];
        v[i] = rat(1, 1);
        v
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>, Error> {
        self.structure.multiply(x, y)
    }

    pub fn multiply_basis(&self, i: usize, j: usize) -> &[Scalar] {
        self.structure.product_of_basis(i, j)
    }

    /// Left multiplication matrix `L(e_i)`.
    pub fn left_mul_matrix(&self, i: usize) -> Matrix {
        self.structure.left_mul_matrix(i)
    }

    /// Left multiplication by an arbitrary element, `L(x) = Σ x_i L(e_i)`.
    pub fn left_mul_of(&self, x: &[Scalar]) -> Result<Matrix, Error> {
        if x.len() != self.dim() {
            return Err(Error::DimMismatch(format!(
                "vector of length {} in a dim-{} algebra",
                x.len(),
                self.dim()
            )));
        }
        let mut m = Matrix::zeros(self.dim(), self.dim());
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            m = m.add(&self.left_mul_matrix(i).scale(xi))?;
        }
        Ok(m)
    }

    /// The adjoint representation `(A, L)`.
    pub fn adjoint_rep(&self) -> Representation {
        let action = (0..self.dim()).map(|i| self.left_mul_matrix(i)).collect();
        Representation::new_unchecked(self.clone(), action)
    }
}

fn default_names(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("e{i}")).collect()
}

/// Symmetrizes an anti-associative product into a mock-Lie algebra:
/// `x ∘ y = x ⋆ y + y ⋆ x`.
///
/// The anti-associator `(x⋆y)⋆z + x⋆(y⋆z)` is required to vanish on all
/// basis triples; the first failing triple is reported otherwise.
pub fn from_anti_associative(star: &StructureConstants) -> Result<MockLieAlgebra, Error> {
    let n = star.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut residual = vec![Scalar::zero(); n];
                // (e_i ⋆ e_j) ⋆ e_k
                for (m, c) in star.product_of_basis(i, j).iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (r, p) in star.product_of_basis(m, k).iter().enumerate() {
                        residual[r] += c * p;
                    }
                }
                // + e_i ⋆ (e_j ⋆ e_k)
                for (m, c) in star.product_of_basis(j, k).iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (r, p) in star.product_of_basis(i, m).iter().enumerate() {
                        residual[r] += c * p;
                    }
                }
                if residual.iter().any(|v| !v.is_zero()) {
                    return Err(Error::NotAntiAssociative { triple: [i, j, k] });
                }
            }
        }
    }
    let mut sym = StructureConstants::zeros(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                sym.set(i, j, k, star.get(i, j, k) + star.get(j, i, k));
            }
        }
    }
    MockLieAlgebra::new(sym)
}

/// Seeded generator of valid instances: a central square-zero extension.
///
/// On `V ⊕ W` the product is a random symmetric bilinear map `V × V → W`
/// and zero elsewhere, so every double product lands in the annihilating
/// ideal `W` and the Jacobi identity holds identically.
pub fn random_central_extension(dim_v: usize, dim_w: usize, seed: u64) -> MockLieAlgebra {
    let dim = dim_v + dim_w;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sc = StructureConstants::zeros(dim);
    for i in 0..dim_v {
        for j in i..dim_v {
            for k in 0..dim_w {
                let num = rng.gen_range(-3i64..=3);
                let den = rng.gen_range(1i64..=2);
                let c = rat(num, den);
                sc.set(i, j, dim_v + k, c.clone());
                sc.set(j, i, dim_v + k, c);
            }
        }
    }
    MockLieAlgebra::new(sc).expect("central square-zero extension always satisfies the axioms")
}
