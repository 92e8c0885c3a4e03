//! Mock-pre-Lie algebras, O-operators and the pre-Lie structures they
//! induce.
//!
//! A mock-pre-Lie product has an anti-associator `Aass(x,y,z) =
//! (x·y)·z + x·(y·z)` that is anti-symmetric in its first two arguments.
//! Symmetrizing the product yields the sub-adjacent mock-Lie algebra, on
//! which left multiplication by the *pre-Lie* product is a representation.
//! An O-operator `T: V → A` relative to a representation ρ satisfies
//! `T(u)∘T(v) = T(ρ(Tu)v + ρ(Tv)u)`; when ρ is the adjoint representation
//! it is a Rota-Baxter operator of weight zero.

use num_traits::Zero;

use crate::algebra::{MockLieAlgebra, StructureConstants};
use crate::error::Error;
use crate::matrix::Matrix;
use crate::rep::{check_symplectic_form, BilinearForm, Representation};
use crate::scalar::Scalar;

/// A validated mock-pre-Lie algebra; the product need not be commutative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MockPreLieAlgebra {
    structure: StructureConstants,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreLieReport {
    pub valid: bool,
    pub first_violation: Option<PreLieViolation>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreLieViolation {
    pub triple: [usize; 3],
    pub residual: Vec<Scalar>,
}

/// Anti-associator of basis elements under arbitrary structure constants.
fn anti_associator(sc: &StructureConstants, i: usize, j: usize, k: usize) -> Vec<Scalar> {
    let n = sc.dim();
    let mut out = vec![Scalar::zero(); n];
    // (e_i · e_j) · e_k
    for (m, c) in sc.product_of_basis(i, j).iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (r, p) in sc.product_of_basis(m, k).iter().enumerate() {
            if !p.is_zero() {
                out[r] += c * p;
            }
        }
    }
    // + e_i · (e_j · e_k)
    for (m, c) in sc.product_of_basis(j, k).iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (r, p) in sc.product_of_basis(i, m).iter().enumerate() {
            if !p.is_zero() {
                out[r] += c * p;
            }
        }
    }
    out
}

/// Checks `Aass(x,y,z) = −Aass(y,x,z)` on all basis triples.
pub fn validate_mock_pre_lie(sc: &StructureConstants) -> PreLieReport {
    let n = sc.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut residual = anti_associator(sc, i, j, k);
                for (r, v) in anti_associator(sc, j, i, k).into_iter().enumerate() {
                    residual[r] += v;
                }
                if residual.iter().any(|v| !v.is_zero()) {
                    return PreLieReport {
                        valid: false,
                        first_violation: Some(PreLieViolation {
                            triple: [i, j, k],
                            residual,
                        }),
                    };
                }
            }
        }
    }
    PreLieReport {
        valid: true,
        first_violation: None,
    }
}

impl MockPreLieAlgebra {
    pub fn new(structure: StructureConstants) -> Result<Self, Error> {
        let report = validate_mock_pre_lie(&structure);
        if !report.valid {
            let triple = report.first_violation.expect("invalid report has witness").triple;
            return Err(Error::NotPreLie { triple });
        }
        Ok(Self { structure })
    }

    pub(crate) fn new_unchecked(structure: StructureConstants) -> Self {
        debug_assert!(validate_mock_pre_lie(&structure).valid);
        Self { structure }
    }

    pub fn dim(&self) -> usize {
        self.structure.dim()
    }

    pub fn structure(&self) -> &StructureConstants {
        &self.structure
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>, Error> {
        self.structure.multiply(x, y)
    }

    pub fn multiply_basis(&self, i: usize, j: usize) -> &[Scalar] {
        self.structure.product_of_basis(i, j)
    }

    /// Θ(e_i), left multiplication by the pre-Lie product.
    pub fn theta_matrix(&self, i: usize) -> Matrix {
        self.structure.left_mul_matrix(i)
    }

    /// The sub-adjacent mock-Lie algebra `x ⋆ y = x·y + y·x` together with
    /// the representation Θ of it on the same space.
    pub fn sub_adjacent(&self) -> (MockLieAlgebra, Representation) {
        let n = self.dim();
        let mut sym = StructureConstants::zeros(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    sym.set(i, j, k, self.structure.get(i, j, k) + self.structure.get(j, i, k));
                }
            }
        }
        let algebra = MockLieAlgebra::new(sym)
            .expect("symmetrization of a mock-pre-Lie product is mock-Lie");
        let action = (0..n).map(|i| self.theta_matrix(i)).collect();
        let theta = Representation::new(algebra.clone(), action)
            .expect("left pre-Lie multiplication represents the sub-adjacent algebra");
        (algebra, theta)
    }
}

/// A validated O-operator: `T: V → A` with
/// `T(u)∘T(v) = T(ρ(Tu)v + ρ(Tv)u)` on all module basis pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OOperator {
    rep: Representation,
    map: Matrix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OOperatorReport {
    pub valid: bool,
    /// Set when ρ is the adjoint representation of its own algebra, making
    /// a valid T a Rota-Baxter operator of weight zero.
    pub rota_baxter: bool,
    pub first_violation: Option<OOperatorViolation>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OOperatorViolation {
    pub pair: [usize; 2],
    pub residual: Vec<Scalar>,
}

/// Checks the O-operator identity on all module basis pairs.
pub fn check_o_operator(rep: &Representation, t: &Matrix) -> Result<OOperatorReport, Error> {
    let a = rep.algebra();
    if t.rows() != a.dim() || t.cols() != rep.module_dim() {
        return Err(Error::Shape(format!(
            "{}x{} map for a dim-{} algebra and dim-{} module",
            t.rows(),
            t.cols(),
            a.dim(),
            rep.module_dim()
        )));
    }
    let m = rep.module_dim();
    let rota_baxter = rep.is_adjoint();
    let t_cols: Vec<Vec<Scalar>> = (0..m)
        .map(|i| (0..t.rows()).map(|r| t.get(r, i).clone()).collect())
        .collect();
    for u in 0..m {
        for v in 0..m {
            let tu = &t_cols[u];
            let tv = &t_cols[v];
            let lhs = a.multiply(tu, tv)?;
            let mut basis_u = vec![Scalar::zero(); m];
            basis_u[u] = crate::scalar::int(1);
            let mut basis_v = vec![Scalar::zero(); m];
            basis_v[v] = crate::scalar::int(1);
            let mut inner = rep.apply(tu, &basis_v)?;
            for (r, w) in rep.apply(tv, &basis_u)?.into_iter().enumerate() {
                inner[r] += w;
            }
            let rhs = t.mul_vec(&inner)?;
            let residual: Vec<Scalar> = lhs.iter().zip(&rhs).map(|(l, r)| l - r).collect();
            if residual.iter().any(|c| !c.is_zero()) {
                return Ok(OOperatorReport {
                    valid: false,
                    rota_baxter,
                    first_violation: Some(OOperatorViolation {
                        pair: [u, v],
                        residual,
                    }),
                });
            }
        }
    }
    Ok(OOperatorReport {
        valid: true,
        rota_baxter,
        first_violation: None,
    })
}

impl OOperator {
    pub fn new(rep: Representation, map: Matrix) -> Result<Self, Error> {
        let report = check_o_operator(&rep, &map)?;
        if !report.valid {
            let pair = report.first_violation.expect("invalid report has witness").pair;
            return Err(Error::NotOOperator { pair });
        }
        Ok(Self { rep, map })
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn map(&self) -> &Matrix {
        &self.map
    }

    pub fn is_rota_baxter(&self) -> bool {
        self.rep.is_adjoint()
    }
}

/// The induced mock-pre-Lie product `u·v = ρ(Tu)v` on the module space.
pub fn prelie_from_o_operator(op: &OOperator) -> MockPreLieAlgebra {
    let m = op.rep.module_dim();
    let t = &op.map;
    let mut sc = StructureConstants::zeros(m);
    for u in 0..m {
        let tu: Vec<Scalar> = (0..t.rows()).map(|r| t.get(r, u).clone()).collect();
        let rho_tu = op.rep.of_element(&tu).expect("shapes fixed at construction");
        for v in 0..m {
            for k in 0..m {
                let c = rho_tu.get(k, v);
                if !c.is_zero() {
                    sc.set(u, v, k, c.clone());
                }
            }
        }
    }
    MockPreLieAlgebra::new(sc).expect("an O-operator induces a mock-pre-Lie product")
}

/// For an invertible O-operator `T: V → A`, the compatible mock-pre-Lie
/// structure on A itself: `x·y = T(ρ(x)T⁻¹(y))`.  Its symmetrization is
/// exactly the original product.
pub fn compatible_prelie_from_invertible(op: &OOperator) -> Result<MockPreLieAlgebra, Error> {
    let t = op.map();
    if !t.is_square() {
        return Err(Error::Shape(format!(
            "invertible O-operator must be square, got {}x{}",
            t.rows(),
            t.cols()
        )));
    }
    let t_inv = t.inverse()?;
    let a = op.rep().algebra();
    let n = a.dim();
    let mut sc = StructureConstants::zeros(n);
    for i in 0..n {
        let rho_i = op.rep().matrix(i);
        // column j of T⁻¹ is T⁻¹(e_j)
        let prod = t.mul(&rho_i.mul(&t_inv).expect("square")).expect("square");
        for j in 0..n {
            for k in 0..n {
                let c = prod.get(k, j);
                if !c.is_zero() {
                    sc.set(i, j, k, c.clone());
                }
            }
        }
    }
    let prelie = MockPreLieAlgebra::new(sc)
        .expect("an invertible O-operator induces a compatible mock-pre-Lie product");
    // compatibility: x·y + y·x recovers the original product exactly
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let sym = prelie.structure.get(i, j, k) + prelie.structure.get(j, i, k);
                assert_eq!(
                    &sym,
                    a.structure().get(i, j, k),
                    "compatible structure must symmetrize to the original product"
                );
            }
        }
    }
    Ok(prelie)
}

/// The compatible mock-pre-Lie product induced by a symplectic form:
/// `ω(x·y, z) = ω(y, x∘z)`, realized as `x·y = T⁻¹(L*(x)T(y))` for the
/// musical isomorphism `⟨T(x), y⟩ = ω(x, y)`.
pub fn prelie_from_symplectic(w: &BilinearForm) -> Result<MockPreLieAlgebra, Error> {
    let report = check_symplectic_form(w);
    if !report.symplectic() {
        return Err(Error::NotSymplectic {
            skew: report.skew,
            nondegenerate: report.nondegenerate,
            cyclic: report.cyclic,
        });
    }
    let a = w.algebra();
    let n = a.dim();
    let t = w.gram().transpose();
    let t_inv = t.inverse().expect("nondegenerate form has invertible gram");
    let mut sc = StructureConstants::zeros(n);
    for i in 0..n {
        let l_star = a.left_mul_matrix(i).transpose();
        let prod = t_inv.mul(&l_star.mul(&t).expect("square")).expect("square");
        for j in 0..n {
            for k in 0..n {
                let c = prod.get(k, j);
                if !c.is_zero() {
                    sc.set(i, j, k, c.clone());
                }
            }
        }
    }
    // defining identity: ω(e_i·e_j, e_k) = ω(e_j, e_i∘e_k) on all triples
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut lhs = Scalar::zero();
                for (m, c) in sc.product_of_basis(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        lhs += c * w.eval_basis(m, k);
                    }
                }
                let mut rhs = Scalar::zero();
                for (m, c) in a.multiply_basis(i, k).iter().enumerate() {
                    if !c.is_zero() {
                        rhs += w.eval_basis(j, m) * c;
                    }
                }
                assert_eq!(lhs, rhs, "symplectic pre-Lie identity must hold");
            }
        }
    }
    // compatibility with the original product
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let sym = sc.get(i, j, k) + sc.get(j, i, k);
                assert_eq!(
                    &sym,
                    a.structure().get(i, j, k),
                    "symplectic pre-Lie structure must be compatible"
                );
            }
        }
    }
    Ok(MockPreLieAlgebra::new_unchecked(sc))
}
