//! Representations, dual representations, semidirect products, and
//! bilinear-form checks.
//!
//! A representation is a linear map ρ into endomorphisms satisfying the
//! anticommutator identity ρ(x∘y) = −ρ(x)ρ(y) − ρ(y)ρ(x).  The dual space
//! is always taken in the basis dual to the module's, so the pairing is the
//! dot product and dual actions are literal transposes.

use num_traits::Zero;

use crate::algebra::{MockLieAlgebra, StructureConstants};
use crate::error::Error;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// A validated representation of a mock-Lie algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    algebra: MockLieAlgebra,
    action: Vec<Matrix>,
    module_dim: usize,
}

/// Outcome of checking the anticommutator identity on all basis pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentationReport {
    pub valid: bool,
    pub first_violation: Option<RepViolation>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepViolation {
    pub pair: [usize; 2],
    pub residual: Matrix,
}

fn check_action_shape(a: &MockLieAlgebra, action: &[Matrix]) -> Result<usize, Error> {
    if action.len() != a.dim() {
        return Err(Error::Shape(format!(
            "{} action matrices for a dim-{} algebra",
            action.len(),
            a.dim()
        )));
    }
    let module_dim = action.first().map_or(0, Matrix::rows);
    for m in action {
        if !m.is_square() || m.rows() != module_dim {
            return Err(Error::Shape(
                "action matrices must be square with a uniform module dimension".into(),
            ));
        }
    }
    Ok(module_dim)
}

/// Checks ρ(e_i ∘ e_j) = −ρ(e_i)ρ(e_j) − ρ(e_j)ρ(e_i) on all basis pairs.
pub fn validate_representation(
    a: &MockLieAlgebra,
    action: &[Matrix],
) -> Result<RepresentationReport, Error> {
    let module_dim = check_action_shape(a, action)?;
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let mut lhs = Matrix::zeros(module_dim, module_dim);
            for (k, c) in a.multiply_basis(i, j).iter().enumerate() {
                if !c.is_zero() {
                    lhs = lhs.add(&action[k].scale(c))?;
                }
            }
            let anti = action[i].mul(&action[j])?.add(&action[j].mul(&action[i])?)?;
            let residual = lhs.add(&anti)?;
            if !residual.is_zero() {
                return Ok(RepresentationReport {
                    valid: false,
                    first_violation: Some(RepViolation {
                        pair: [i, j],
                        residual,
                    }),
                });
            }
        }
    }
    Ok(RepresentationReport {
        valid: true,
        first_violation: None,
    })
}

impl Representation {
    /// Validates the action and wraps it.
    pub fn new(algebra: MockLieAlgebra, action: Vec<Matrix>) -> Result<Self, Error> {
        let report = validate_representation(&algebra, &action)?;
        if !report.valid {
            let pair = report.first_violation.expect("invalid report has witness").pair;
            return Err(Error::NotRepresentation { pair });
        }
        let module_dim = action.first().map_or(0, Matrix::rows);
        Ok(Self {
            algebra,
            action,
            module_dim,
        })
    }

    /// For actions valid by construction (adjoints, duals, Θ of a pre-Lie
    /// product); still checked in debug builds.
    pub(crate) fn new_unchecked(algebra: MockLieAlgebra, action: Vec<Matrix>) -> Self {
        debug_assert!(
            validate_representation(&algebra, &action)
                .map(|r| r.valid)
                .unwrap_or(false),
            "new_unchecked called with an invalid action"
        );
        let module_dim = action.first().map_or(0, Matrix::rows);
        Self {
            algebra,
            action,
            module_dim,
        }
    }

    pub fn algebra(&self) -> &MockLieAlgebra {
        &self.algebra
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn matrix(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.action
    }

    /// ρ(x) for an arbitrary element x.
    pub fn of_element(&self, x: &[Scalar]) -> Result<Matrix, Error> {
        if x.len() != self.algebra.dim() {
            return Err(Error::DimMismatch(format!(
                "element of length {} in a dim-{} algebra",
                x.len(),
                self.algebra.dim()
            )));
        }
        let mut m = Matrix::zeros(self.module_dim, self.module_dim);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                m = m.add(&self.action[i].scale(xi))?;
            }
        }
        Ok(m)
    }

    /// ρ(x)v.
    pub fn apply(&self, x: &[Scalar], v: &[Scalar]) -> Result<Vec<Scalar>, Error> {
        self.of_element(x)?.mul_vec(v)
    }

    /// The dual representation ρ* on V*, acting by transposes.
    pub fn dual(&self) -> Representation {
        let action = self.action.iter().map(Matrix::transpose).collect();
        Representation::new_unchecked(self.algebra.clone(), action)
    }

    /// Whether this is the adjoint representation of its own algebra,
    /// compared structurally.
    pub fn is_adjoint(&self) -> bool {
        self.module_dim == self.algebra.dim()
            && (0..self.algebra.dim()).all(|i| self.action[i] == self.algebra.left_mul_matrix(i))
    }

    /// The semidirect product A ⋉_ρ V.
    ///
    /// Always a valid mock-Lie algebra when ρ is a representation; the
    /// result re-passes the validator.
    pub fn semidirect(&self) -> MockLieAlgebra {
        let sc = semidirect_structure(&self.algebra, &self.action)
            .expect("shapes verified at construction");
        let n = self.algebra.dim();
        let names = self
            .algebra
            .basis_names()
            .iter()
            .cloned()
            .chain((1..=self.module_dim).map(|i| format!("v{i}")))
            .collect();
        debug_assert_eq!(sc.dim(), n + self.module_dim);
        MockLieAlgebra::with_basis_names(sc, Some(names))
            .expect("semidirect product of a representation is mock-Lie")
    }
}

/// Raw structure constants of A ⋉ V for an arbitrary action, without any
/// validity requirement.  Lets callers exercise both directions of the
/// equivalence "ρ is a representation iff the semidirect product is
/// mock-Lie".
pub fn semidirect_structure(
    a: &MockLieAlgebra,
    action: &[Matrix],
) -> Result<StructureConstants, Error> {
    let module_dim = check_action_shape(a, action)?;
    let n = a.dim();
    let total = n + module_dim;
    let mut sc = StructureConstants::zeros(total);
    for i in 0..n {
        for j in 0..n {
            for (k, c) in a.multiply_basis(i, j).iter().enumerate() {
                if !c.is_zero() {
                    sc.set(i, j, k, c.clone());
                }
            }
        }
    }
    for i in 0..n {
        for b in 0..module_dim {
            for av in 0..module_dim {
                let c = action[i].get(av, b);
                if !c.is_zero() {
                    sc.set(i, n + b, n + av, c.clone());
                    sc.set(n + b, i, n + av, c.clone());
                }
            }
        }
    }
    Ok(sc)
}

/// A bilinear form on an algebra, as its Gram matrix ω(e_i, e_j) = gram[i][j].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    algebra: MockLieAlgebra,
    gram: Matrix,
}

impl BilinearForm {
    pub fn new(algebra: MockLieAlgebra, gram: Matrix) -> Result<Self, Error> {
        if gram.rows() != algebra.dim() || gram.cols() != algebra.dim() {
            return Err(Error::Shape(format!(
                "{}x{} gram matrix for a dim-{} algebra",
                gram.rows(),
                gram.cols(),
                algebra.dim()
            )));
        }
        Ok(Self { algebra, gram })
    }

    pub fn algebra(&self) -> &MockLieAlgebra {
        &self.algebra
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn eval_basis(&self, i: usize, j: usize) -> &Scalar {
        self.gram.get(i, j)
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Result<Scalar, Error> {
        let gy = self.gram.mul_vec(y)?;
        if x.len() != gy.len() {
            return Err(Error::DimMismatch("bilinear form arguments".into()));
        }
        let mut acc = Scalar::zero();
        for (xi, gi) in x.iter().zip(&gy) {
            acc += xi * gi;
        }
        Ok(acc)
    }

    pub fn is_symmetric(&self) -> bool {
        self.gram == self.gram.transpose()
    }

    pub fn is_skew(&self) -> bool {
        self.gram == self.gram.transpose().scale(&crate::scalar::int(-1))
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.gram.rank() == self.gram.rows()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantFormReport {
    pub symmetric: bool,
    pub nondegenerate: bool,
    pub invariant: bool,
    pub first_violation: Option<FormViolation>,
}

impl InvariantFormReport {
    pub fn admissible(&self) -> bool {
        self.symmetric && self.nondegenerate && self.invariant
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticFormReport {
    pub skew: bool,
    pub nondegenerate: bool,
    pub cyclic: bool,
    pub first_violation: Option<FormViolation>,
}

impl SymplecticFormReport {
    pub fn symplectic(&self) -> bool {
        self.skew && self.nondegenerate && self.cyclic
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormViolation {
    pub triple: [usize; 3],
    pub residual: Scalar,
}

/// Checks invariance ω(x∘y, z) = ω(x, y∘z) on all basis triples, plus
/// symmetry and nondegeneracy of the Gram matrix.
pub fn check_invariant_form(w: &BilinearForm) -> InvariantFormReport {
    let a = w.algebra();
    let n = a.dim();
    let mut invariant = true;
    let mut first_violation = None;
    'outer: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut residual = Scalar::zero();
                for (m, c) in a.multiply_basis(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        residual += c * w.eval_basis(m, k);
                    }
                }
                for (m, c) in a.multiply_basis(j, k).iter().enumerate() {
                    if !c.is_zero() {
                        residual -= c * w.eval_basis(i, m);
                    }
                }
                if !residual.is_zero() {
                    invariant = false;
                    first_violation = Some(FormViolation {
                        triple: [i, j, k],
                        residual,
                    });
                    break 'outer;
                }
            }
        }
    }
    InvariantFormReport {
        symmetric: w.is_symmetric(),
        nondegenerate: w.is_nondegenerate(),
        invariant,
        first_violation,
    }
}

/// Checks the cyclic identity ω(x∘y, z) + ω(y∘z, x) + ω(z∘x, y) = 0 on all
/// basis triples, plus skewness and nondegeneracy.
pub fn check_symplectic_form(w: &BilinearForm) -> SymplecticFormReport {
    let a = w.algebra();
    let n = a.dim();
    let mut cyclic = true;
    let mut first_violation = None;
    'outer: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut residual = Scalar::zero();
                for (m, c) in a.multiply_basis(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        residual += c * w.eval_basis(m, k);
                    }
                }
                for (m, c) in a.multiply_basis(j, k).iter().enumerate() {
                    if !c.is_zero() {
                        residual += c * w.eval_basis(m, i);
                    }
                }
                for (m, c) in a.multiply_basis(k, i).iter().enumerate() {
                    if !c.is_zero() {
                        residual += c * w.eval_basis(m, j);
                    }
                }
                if !residual.is_zero() {
                    cyclic = false;
                    first_violation = Some(FormViolation {
                        triple: [i, j, k],
                        residual,
                    });
                    break 'outer;
                }
            }
        }
    }
    SymplecticFormReport {
        skew: w.is_skew(),
        nondegenerate: w.is_nondegenerate(),
        cyclic,
        first_violation,
    }
}

/// The isomorphism φ: A → A* with ⟨φ(x), y⟩ = ω(x, y), for a symmetric
/// invariant nondegenerate ω.  It intertwines the adjoint and coadjoint
/// representations: L*(e_i) φ = φ L(e_i) for every i.
pub fn equivalence_from_form(w: &BilinearForm) -> Result<Matrix, Error> {
    let report = check_invariant_form(w);
    if !report.admissible() {
        return Err(Error::FormNotAdmissible {
            symmetric: report.symmetric,
            invariant: report.invariant,
            nondegenerate: report.nondegenerate,
        });
    }
    let phi = w.gram().transpose();
    let a = w.algebra();
    for i in 0..a.dim() {
        let l = a.left_mul_matrix(i);
        let lhs = l.transpose().mul(&phi).expect("square");
        let rhs = phi.mul(&l).expect("square");
        assert_eq!(lhs, rhs, "admissible form must intertwine L and L*");
    }
    Ok(phi)
}
