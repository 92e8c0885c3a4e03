//! Yang-Baxter machinery: coboundary cobrackets, the co-Jacobiator E_Δ,
//! the bracket [[r,r]], the two coboundary conditions, operator-form
//! checks, and the lifting constructions that turn O-operators into
//! solutions.
//!
//! For r = Σ a_{ij} e_i ⊗ e_j the bracket is assembled directly from the
//! three componentwise products
//!
//!   r₁₂∘r₁₃ = Σ (e_i ∘ e_p) ⊗ e_j ⊗ e_q,
//!   r₁₃∘r₂₃ = Σ e_i ⊗ e_p ⊗ (e_j ∘ e_q),
//!   r₁₂∘r₂₃ = Σ e_i ⊗ (e_j ∘ e_p) ⊗ e_q,
//!
//! summed over index pairs weighted by a_{ij} a_{pq}; no unit element is
//! ever adjoined.

use num_traits::Zero;

use crate::algebra::MockLieAlgebra;
use crate::bialgebra::Cobracket;
use crate::error::Error;
use crate::matrix::Matrix;
use crate::prelie::{check_o_operator, MockPreLieAlgebra};
use crate::rep::{check_invariant_form, BilinearForm, Representation};
use crate::scalar::{int, Scalar};
use crate::tensor::{FactorMap, Tensor2, Tensor3};

/// An element r ∈ A⊗A over a fixed algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RTensor {
    algebra: MockLieAlgebra,
    tensor: Tensor2,
}

impl RTensor {
    pub fn new(algebra: MockLieAlgebra, tensor: Tensor2) -> Result<Self, Error> {
        let n = algebra.dim();
        if tensor.dims() != (n, n) {
            return Err(Error::Shape(format!(
                "{:?} tensor over a dim-{n} algebra",
                tensor.dims()
            )));
        }
        Ok(Self { algebra, tensor })
    }

    /// Builds from sparse (i, j, coefficient) entries.
    pub fn from_entries(
        algebra: MockLieAlgebra,
        entries: &[(usize, usize, Scalar)],
    ) -> Result<Self, Error> {
        let n = algebra.dim();
        let mut t = Tensor2::zeros(n, n);
        for (i, j, c) in entries {
            if *i >= n || *j >= n {
                return Err(Error::Shape(format!(
                    "tensor entry ({i}, {j}) out of range for dim {n}"
                )));
            }
            t.add_assign_at(*i, *j, c);
        }
        Self::new(algebra, t)
    }

    pub fn algebra(&self) -> &MockLieAlgebra {
        &self.algebra
    }

    pub fn tensor(&self) -> &Tensor2 {
        &self.tensor
    }

    pub fn is_skew(&self) -> bool {
        self.tensor.is_skew()
    }

    pub fn is_symmetric(&self) -> bool {
        self.tensor.is_symmetric()
    }
}

/// r read as a linear map A* → A via ⟨u*, r(v*)⟩ = ⟨u* ⊗ v*, r⟩, together
/// with its nondegeneracy (invertibility) flag.
pub fn r_as_map(r: &RTensor) -> (Matrix, bool) {
    let n = r.algebra.dim();
    let m = Matrix::from_fn(n, n, |i, j| r.tensor.get(i, j).clone());
    let nondegenerate = m.rank() == n;
    (m, nondegenerate)
}

/// The coboundary cobracket Δ(x) = (L(x)⊗id − id⊗L(x)) r.
///
/// Always satisfies the cocycle compatibility condition, for every r.
pub fn coboundary_cobracket(r: &RTensor) -> Cobracket {
    let a = &r.algebra;
    let n = a.dim();
    let images = (0..n)
        .map(|i| {
            let l = a.left_mul_matrix(i);
            let lm = FactorMap::Map(&l);
            let left = r
                .tensor
                .apply_factorwise(lm, FactorMap::Identity)
                .expect("square");
            let right = r
                .tensor
                .apply_factorwise(FactorMap::Identity, lm)
                .expect("square");
            left.sub(&right).expect("square")
        })
        .collect();
    Cobracket::new(a.clone(), images).expect("images live in A⊗A by construction")
}

/// E_Δ(x) = (id + σ + σ²)((id ⊗ Δ) Δ(x)) per basis element.
///
/// Vanishes identically exactly when the dual product satisfies the Jacobi
/// identity.
pub fn e_delta(d: &Cobracket) -> Vec<Tensor3> {
    let n = d.algebra().dim();
    (0..n)
        .map(|i| {
            let t2 = d.image(i);
            let mut t = Tensor3::zeros([n, n, n]);
            for j in 0..n {
                for k in 0..n {
                    let c = t2.get(j, k);
                    if c.is_zero() {
                        continue;
                    }
                    let inner = d.image(k);
                    for a in 0..n {
                        for b in 0..n {
                            let w = inner.get(a, b);
                            if !w.is_zero() {
                                t.add_assign_at(j, a, b, &(c * w));
                            }
                        }
                    }
                }
            }
            let s1 = t.cyclic();
            let s2 = s1.cyclic();
            t.add(&s1).expect("square").add(&s2).expect("square")
        })
        .collect()
}

/// The three componentwise products (r₁₂∘r₁₃, r₁₃∘r₂₃, r₁₂∘r₂₃).
pub fn yb_bracket_components(r: &RTensor) -> [Tensor3; 3] {
    let a = &r.algebra;
    let n = a.dim();
    let support = r.tensor.support();
    let mut c12_13 = Tensor3::zeros([n, n, n]);
    let mut c13_23 = Tensor3::zeros([n, n, n]);
    let mut c12_23 = Tensor3::zeros([n, n, n]);
    for (i, j, cij) in &support {
        for (p, q, cpq) in &support {
            let w = cij * cpq;
            for (k, c) in a.multiply_basis(*i, *p).iter().enumerate() {
                if !c.is_zero() {
                    c12_13.add_assign_at(k, *j, *q, &(&w * c));
                }
            }
            for (k, c) in a.multiply_basis(*j, *q).iter().enumerate() {
                if !c.is_zero() {
                    c13_23.add_assign_at(*i, *p, k, &(&w * c));
                }
            }
            for (k, c) in a.multiply_basis(*j, *p).iter().enumerate() {
                if !c.is_zero() {
                    c12_23.add_assign_at(*i, k, *q, &(&w * c));
                }
            }
        }
    }
    [c12_13, c13_23, c12_23]
}

/// [[r,r]] = r₁₂∘r₁₃ + r₁₃∘r₂₃ − r₁₂∘r₂₃.
pub fn yb_bracket(r: &RTensor) -> Tensor3 {
    let [c1, c2, c3] = yb_bracket_components(r);
    c1.add(&c2).expect("square").sub(&c3).expect("square")
}

/// Q(x) = L(x)⊗id⊗id + id⊗L(x)⊗id + id⊗id⊗L(x) applied to a 3-tensor.
pub fn q_action(a: &MockLieAlgebra, x: &[Scalar], t: &Tensor3) -> Result<Tensor3, Error> {
    if x.len() != a.dim() {
        return Err(Error::DimMismatch(format!(
            "element of length {} in a dim-{} algebra",
            x.len(),
            a.dim()
        )));
    }
    if t.dims() != [a.dim(); 3] {
        return Err(Error::DimMismatch(
            "tensor dims do not match the algebra".into(),
        ));
    }
    let l = a.left_mul_of(x)?;
    let lm = FactorMap::Map(&l);
    let id = FactorMap::Identity;
    let t1 = t.apply_factorwise(lm, id, id)?;
    let t2 = t.apply_factorwise(id, lm, id)?;
    let t3 = t.apply_factorwise(id, id, lm)?;
    t1.add(&t2)?.add(&t3)
}

/// How a coboundary candidate r classifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    /// Skew-symmetric solution of the Yang-Baxter equation.
    Triangular,
    /// Non-skew solution whose symmetric part is still invariant enough.
    Quasitriangular,
    /// Both coboundary conditions hold but [[r,r]] ≠ 0.
    CoboundaryOnly,
    /// The dual product of the induced cobracket is not mock-Lie.
    NotCoboundaryAdmissible,
}

impl Classification {
    pub fn as_str(&self) -> &'static str {
        match self {
            Classification::Triangular => "triangular",
            Classification::Quasitriangular => "quasitriangular",
            Classification::CoboundaryOnly => "coboundary-only",
            Classification::NotCoboundaryAdmissible => "not-coboundary-admissible",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoboundaryReport {
    /// (L(x)⊗id − id⊗L(x))(r + τ(r)) = 0 for all basis x.
    pub cond_i: bool,
    /// Q(x)[[r,r]] = 0 for all basis x.
    pub cond_ii: bool,
    /// [[r,r]] = 0.
    pub ybe: bool,
    pub skew: bool,
    pub classification: Classification,
}

/// Evaluates both coboundary conditions, the Yang-Baxter equation and the
/// resulting classification for an arbitrary (not necessarily skew) r.
pub fn check_coboundary_conditions(r: &RTensor) -> CoboundaryReport {
    let a = &r.algebra;
    let n = a.dim();
    let sym = r.tensor.add(&r.tensor.switch()).expect("square");

    let mut cond_i = true;
    for i in 0..n {
        let l = a.left_mul_matrix(i);
        let lm = FactorMap::Map(&l);
        let applied = sym
            .apply_factorwise(lm, FactorMap::Identity)
            .expect("square")
            .sub(&sym.apply_factorwise(FactorMap::Identity, lm).expect("square"))
            .expect("square");
        if !applied.is_zero() {
            cond_i = false;
            break;
        }
    }

    let bracket = yb_bracket(r);
    let ybe = bracket.is_zero();
    let mut cond_ii = true;
    if !ybe {
        for i in 0..n {
            let q = q_action(a, &a.basis_vector(i), &bracket).expect("dims match");
            if !q.is_zero() {
                cond_ii = false;
                break;
            }
        }
    }

    let skew = r.is_skew();
    let classification = if !(cond_i && cond_ii) {
        Classification::NotCoboundaryAdmissible
    } else if !ybe {
        Classification::CoboundaryOnly
    } else if skew {
        Classification::Triangular
    } else {
        Classification::Quasitriangular
    };

    CoboundaryReport {
        cond_i,
        cond_ii,
        ybe,
        skew,
        classification,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorFormReport {
    pub valid: bool,
    pub first_violation: Option<OperatorFormViolation>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorFormViolation {
    /// Dual basis pair (ξ, η) = (f_j, f_q).
    pub pair: [usize; 2],
    pub residual: Vec<Scalar>,
}

/// Operator form of the Yang-Baxter equation for skew r:
/// r(ξ)∘r(η) = r(L*(r(ξ))η + L*(r(η))ξ) on all dual basis pairs.
///
/// Agrees exactly with `[[r,r]] = 0`.
pub fn check_ybe_operator_form(r: &RTensor) -> Result<OperatorFormReport, Error> {
    if !r.is_skew() {
        return Err(Error::NotSkew);
    }
    let a = &r.algebra;
    let n = a.dim();
    let (map, _) = r_as_map(r);
    for j in 0..n {
        for q in 0..n {
            // r applied to dual basis vectors is a column of the map
            let r_xi: Vec<Scalar> = (0..n).map(|i| map.get(i, j).clone()).collect();
            let r_eta: Vec<Scalar> = (0..n).map(|i| map.get(i, q).clone()).collect();
            let lhs = a.multiply(&r_xi, &r_eta)?;
            let l_star_rxi = a.left_mul_of(&r_xi)?.transpose();
            let l_star_reta = a.left_mul_of(&r_eta)?.transpose();
            // η and ξ as coordinate vectors in the dual basis
            let mut eta = vec![Scalar::zero(); n];
            eta[q] = int(1);
            let mut xi = vec![Scalar::zero(); n];
            xi[j] = int(1);
            let mut arg = l_star_rxi.mul_vec(&eta)?;
            for (idx, v) in l_star_reta.mul_vec(&xi)?.into_iter().enumerate() {
                arg[idx] += v;
            }
            let rhs = map.mul_vec(&arg)?;
            let residual: Vec<Scalar> = lhs.iter().zip(&rhs).map(|(l, r)| l - r).collect();
            if residual.iter().any(|c| !c.is_zero()) {
                return Ok(OperatorFormReport {
                    valid: false,
                    first_violation: Some(OperatorFormViolation {
                        pair: [j, q],
                        residual,
                    }),
                });
            }
        }
    }
    Ok(OperatorFormReport {
        valid: true,
        first_violation: None,
    })
}

/// Agreement report between the tensor Yang-Baxter check for r and the
/// Rota-Baxter check for r∘φ, where φ is the musical isomorphism of an
/// invariant form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorrespondenceReport {
    pub ybe: bool,
    pub rota_baxter: bool,
    pub agree: bool,
}

/// For skew r and a symmetric invariant nondegenerate ω: r solves the
/// Yang-Baxter equation iff r∘φ is a Rota-Baxter operator of weight zero.
pub fn rota_baxter_correspondence(
    r: &RTensor,
    w: &BilinearForm,
) -> Result<CorrespondenceReport, Error> {
    if !r.is_skew() {
        return Err(Error::NotSkew);
    }
    if w.algebra() != &r.algebra {
        return Err(Error::AlgebraMismatch);
    }
    let inv = check_invariant_form(w);
    if !inv.admissible() {
        return Err(Error::FormNotAdmissible {
            symmetric: inv.symmetric,
            invariant: inv.invariant,
            nondegenerate: inv.nondegenerate,
        });
    }
    let (map, _) = r_as_map(r);
    let phi = w.gram().transpose();
    let composed = map.mul(&phi)?;
    let adjoint = r.algebra.adjoint_rep();
    let rb = check_o_operator(&adjoint, &composed)?;
    let ybe = yb_bracket(r).is_zero();
    Ok(CorrespondenceReport {
        ybe,
        rota_baxter: rb.valid,
        agree: ybe == rb.valid,
    })
}

/// A linear map V → A lifted to a skew tensor over Â = A ⋉ V*.
#[derive(Debug, Clone)]
pub struct Lift {
    /// Â = A ⋉ V*, the semidirect product along the dual representation.
    pub algebra: MockLieAlgebra,
    /// r = T − τ(T) placed in Â⊗Â via the A⊗V* embedding.
    pub r: RTensor,
    /// [[r,r]] in Â, zero exactly when T is an O-operator.
    pub bracket: Tensor3,
}

/// Embeds T: V → A as r = T − τ(T) in Â = A ⋉ V* and evaluates [[r,r]].
///
/// T is not required to be an O-operator; the bracket vanishes exactly when
/// it is one.
pub fn lift_o_operator(rep: &Representation, t: &Matrix) -> Result<Lift, Error> {
    let a = rep.algebra();
    let n = a.dim();
    let m = rep.module_dim();
    if t.rows() != n || t.cols() != m {
        return Err(Error::Shape(format!(
            "{}x{} map for a dim-{n} algebra and dim-{m} module",
            t.rows(),
            t.cols()
        )));
    }
    let hat = rep.dual().semidirect();
    let total = n + m;
    let mut tensor = Tensor2::zeros(total, total);
    for i in 0..m {
        for k in 0..n {
            let c = t.get(k, i);
            if !c.is_zero() {
                tensor.add_assign_at(k, n + i, c);
                let neg = -c.clone();
                tensor.add_assign_at(n + i, k, &neg);
            }
        }
    }
    let r = RTensor::new(hat.clone(), tensor)?;
    let bracket = yb_bracket(&r);
    Ok(Lift {
        algebra: hat,
        r,
        bracket,
    })
}

/// The canonical solution attached to a mock-pre-Lie algebra: lift the
/// identity O-operator of the sub-adjacent algebra, giving
/// r = Σ (e_i ⊗ e_i* − e_i* ⊗ e_i) in A^ac ⋉ (A^ac)*.
pub fn canonical_solution_from_prelie(p: &MockPreLieAlgebra) -> Lift {
    let (_, theta) = p.sub_adjacent();
    let lift = lift_o_operator(&theta, &Matrix::identity(p.dim()))
        .expect("identity map has the right shape");
    assert!(
        lift.bracket.is_zero(),
        "identity is an O-operator of the sub-adjacent algebra, so the lift must solve the Yang-Baxter equation"
    );
    lift
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{a2, a4, a4_bialgebra_cobracket, a4_hyperbolic_form, p2, r_e1e2, r_e2e4};
    use crate::scalar::rat;

    #[test]
    fn r_as_map_of_skew_rank_two() {
        let r = r_e1e2();
        let (map, nondeg) = r_as_map(&r);
        assert_eq!(*map.get(0, 1), int(1));
        assert_eq!(*map.get(1, 0), int(-1));
        assert!(!nondeg);
        assert_eq!(map.rank(), 2);
    }

    #[test]
    fn zero_tensor_is_degenerate() {
        let r = RTensor::new(a4(), Tensor2::zeros(4, 4)).unwrap();
        let (map, nondeg) = r_as_map(&r);
        assert!(map.is_zero());
        assert!(!nondeg);
    }

    #[test]
    fn coboundary_cobracket_of_r_e1e2() {
        let d = coboundary_cobracket(&r_e1e2());
        assert_eq!(d.images(), a4_bialgebra_cobracket().images());
    }

    #[test]
    fn coboundary_cobracket_over_abelian_is_zero() {
        let a = MockLieAlgebra::abelian(3);
        let mut t = Tensor2::zeros(3, 3);
        t.set(0, 1, rat(5, 3));
        t.set(2, 2, int(-2));
        let r = RTensor::new(a, t).unwrap();
        assert!(coboundary_cobracket(&r).is_zero());
    }

    #[test]
    fn coboundary_cobracket_of_annihilator_supported_r_is_zero() {
        let d = coboundary_cobracket(&r_e2e4());
        assert!(d.is_zero());
    }

    #[test]
    fn e_delta_vanishes_for_the_a4_bialgebra() {
        let d = a4_bialgebra_cobracket();
        for t in e_delta(&d) {
            assert!(t.is_zero());
        }
    }

    #[test]
    fn e_delta_of_diagonal_cobracket_triples() {
        // Δ(e1) = e1⊗e1 on A2: (id⊗Δ)Δ(e1) = e1⊗e1⊗e1, tripled by the
        // cyclic sum
        let a = a2();
        let mut t = Tensor2::zeros(2, 2);
        t.set(0, 0, int(1));
        let d = Cobracket::new(a, vec![t, Tensor2::zeros(2, 2)]).unwrap();
        let e = e_delta(&d);
        assert_eq!(*e[0].get(0, 0, 0), int(3));
        assert_eq!(e[0].support().len(), 1);
        assert!(e[1].is_zero());
    }

    #[test]
    fn yb_bracket_of_r_e1e2_is_three_e222() {
        let [c1, c2, c3] = yb_bracket_components(&r_e1e2());
        let mut expected = Tensor3::zeros([4, 4, 4]);
        expected.set(1, 1, 1, int(1));
        assert_eq!(c1, expected);
        assert_eq!(c2, expected);
        let mut neg = Tensor3::zeros([4, 4, 4]);
        neg.set(1, 1, 1, int(-1));
        assert_eq!(c3, neg);
        let bracket = yb_bracket(&r_e1e2());
        assert_eq!(*bracket.get(1, 1, 1), int(3));
        assert_eq!(bracket.support().len(), 1);
    }

    #[test]
    fn yb_bracket_of_annihilator_r_is_zero() {
        assert!(yb_bracket(&r_e2e4()).is_zero());
    }

    #[test]
    fn q_action_examples() {
        let a = a4();
        let zero = Tensor3::zeros([4, 4, 4]);
        assert!(q_action(&a, &a.basis_vector(0), &zero).unwrap().is_zero());
        // Q(e1) kills e2⊗e2⊗e2 since L(e1)e2 = 0
        let mut t = Tensor3::zeros([4, 4, 4]);
        t.set(1, 1, 1, int(1));
        assert!(q_action(&a, &a.basis_vector(0), &t).unwrap().is_zero());
        // Q(e1)(e1⊗e1⊗e1) = e2⊗e1⊗e1 + e1⊗e2⊗e1 + e1⊗e1⊗e2
        let mut s = Tensor3::zeros([4, 4, 4]);
        s.set(0, 0, 0, int(1));
        let q = q_action(&a, &a.basis_vector(0), &s).unwrap();
        assert_eq!(*q.get(1, 0, 0), int(1));
        assert_eq!(*q.get(0, 1, 0), int(1));
        assert_eq!(*q.get(0, 0, 1), int(1));
        assert_eq!(q.support().len(), 3);
    }

    #[test]
    fn r_e2e4_is_triangular() {
        let report = check_coboundary_conditions(&r_e2e4());
        assert!(report.cond_i && report.cond_ii && report.ybe && report.skew);
        assert_eq!(report.classification, Classification::Triangular);
    }

    #[test]
    fn r_e1e2_is_coboundary_only() {
        let report = check_coboundary_conditions(&r_e1e2());
        assert!(report.cond_i);
        assert!(report.cond_ii);
        assert!(!report.ybe);
        assert!(report.skew);
        assert_eq!(report.classification, Classification::CoboundaryOnly);
    }

    #[test]
    fn abelian_r_is_always_a_solution() {
        let a = MockLieAlgebra::abelian(3);
        let mut t = Tensor2::zeros(3, 3);
        t.set(0, 0, int(2));
        t.set(1, 2, rat(1, 2));
        let r = RTensor::new(a, t).unwrap();
        let report = check_coboundary_conditions(&r);
        assert!(report.cond_i && report.cond_ii && report.ybe);
        assert!(!report.skew);
        assert_eq!(report.classification, Classification::Quasitriangular);
    }

    #[test]
    fn operator_form_matches_tensor_form() {
        let good = check_ybe_operator_form(&r_e2e4()).unwrap();
        assert!(good.valid);
        let bad = check_ybe_operator_form(&r_e1e2()).unwrap();
        assert!(!bad.valid);
        assert!(bad.first_violation.is_some());
    }

    #[test]
    fn operator_form_requires_skew() {
        let a = a4();
        let mut t = Tensor2::zeros(4, 4);
        t.set(0, 0, int(1));
        let r = RTensor::new(a, t).unwrap();
        assert_eq!(check_ybe_operator_form(&r), Err(Error::NotSkew));
    }

    #[test]
    fn rota_baxter_correspondence_on_a4() {
        let w = a4_hyperbolic_form();
        let good = rota_baxter_correspondence(&r_e2e4(), &w).unwrap();
        assert!(good.ybe && good.rota_baxter && good.agree);
        let bad = rota_baxter_correspondence(&r_e1e2(), &w).unwrap();
        assert!(!bad.ybe && !bad.rota_baxter && bad.agree);
    }

    #[test]
    fn correspondence_is_trivially_true_over_abelian_algebras() {
        let a = MockLieAlgebra::abelian(2);
        let w = BilinearForm::new(a.clone(), Matrix::identity(2)).unwrap();
        let mut t = Tensor2::zeros(2, 2);
        t.set(0, 1, int(1));
        t.set(1, 0, int(-1));
        let r = RTensor::new(a, t).unwrap();
        let report = rota_baxter_correspondence(&r, &w).unwrap();
        assert!(report.ybe && report.rota_baxter && report.agree);
    }

    #[test]
    fn correspondence_rejects_bad_inputs() {
        let a = a4();
        let w = BilinearForm::new(a.clone(), Matrix::identity(4)).unwrap();
        assert!(matches!(
            rota_baxter_correspondence(&r_e2e4(), &w),
            Err(Error::FormNotAdmissible { .. })
        ));
        let mut t = Tensor2::zeros(4, 4);
        t.set(0, 0, int(1));
        let sym = RTensor::new(a, t).unwrap();
        assert_eq!(
            rota_baxter_correspondence(&sym, &a4_hyperbolic_form()),
            Err(Error::NotSkew)
        );
    }

    #[test]
    fn lift_of_zero_map_solves_ybe() {
        let a = a4();
        let lift = lift_o_operator(&a.adjoint_rep(), &Matrix::zeros(4, 4)).unwrap();
        assert_eq!(lift.algebra.dim(), 8);
        assert!(lift.r.tensor().is_zero());
        assert!(lift.bracket.is_zero());
    }

    #[test]
    fn lift_blocks_are_t_and_minus_t_transpose() {
        let (_, theta) = p2().sub_adjacent();
        let mut t = Matrix::zeros(2, 2);
        t.set(0, 0, int(3));
        t.set(1, 0, rat(1, 2));
        let lift = lift_o_operator(&theta, &t).unwrap();
        let r = lift.r.tensor();
        assert_eq!(*r.get(0, 2), int(3));
        assert_eq!(*r.get(1, 2), rat(1, 2));
        assert_eq!(*r.get(2, 0), int(-3));
        assert_eq!(*r.get(2, 1), rat(-1, 2));
        assert!(lift.r.is_skew());
    }

    #[test]
    fn lift_of_non_o_operator_fails_ybe() {
        let a = a4();
        let mut t = Matrix::zeros(4, 4);
        t.set(0, 1, int(1)); // T(e2) = e1 is not a Rota-Baxter operator
        let lift = lift_o_operator(&a.adjoint_rep(), &t).unwrap();
        assert!(!lift.bracket.is_zero());
    }

    #[test]
    fn canonical_solution_of_p2() {
        let lift = canonical_solution_from_prelie(&p2());
        assert_eq!(lift.algebra.dim(), 4);
        assert!(lift.r.is_skew());
        assert!(lift.bracket.is_zero());
        // r = Σ (e_i ⊗ e_i* − e_i* ⊗ e_i)
        for i in 0..2 {
            assert_eq!(*lift.r.tensor().get(i, 2 + i), int(1));
            assert_eq!(*lift.r.tensor().get(2 + i, i), int(-1));
        }
    }

    #[test]
    fn canonical_solution_of_zero_prelie() {
        let p = MockPreLieAlgebra::new(crate::algebra::StructureConstants::zeros(2)).unwrap();
        let lift = canonical_solution_from_prelie(&p);
        assert!(lift.bracket.is_zero());
        assert!(lift.r.is_skew());
    }
}
