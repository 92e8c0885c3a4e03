//! Exact-arithmetic toolkit for finite-dimensional mock-Lie algebras.
//!
//! A mock-Lie algebra is a commutative algebra satisfying the Jacobi
//! identity.  This crate builds and verifies, over ℚ with no tolerances:
//!
//! - algebras from structure constants, with axiom validation and witnesses
//!   ([`algebra`]);
//! - representations, dual representations, semidirect products, invariant
//!   and symplectic bilinear forms ([`rep`]);
//! - mock-pre-Lie algebras, O-operators, Rota-Baxter operators and the
//!   pre-Lie structures they induce ([`prelie`]);
//! - cobrackets, bialgebras, matched pairs, bicrossed products, Manin
//!   triples and the double construction ([`bialgebra`]);
//! - the Yang-Baxter bracket [[r,r]], coboundary conditions, operator-form
//!   checks and solution lifts ([`ybe`]).
//!
//! Everything is immutable after construction and every operation is a pure
//! function, so values can be shared freely across threads.
//!
//! ```
//! use mocklie::fixtures;
//! use mocklie::ybe::{check_coboundary_conditions, yb_bracket, Classification};
//!
//! // e2⊗e4 − e4⊗e2 solves the Yang-Baxter equation in the dim-4 fixture
//! let r = fixtures::r_e2e4();
//! assert!(yb_bracket(&r).is_zero());
//! assert_eq!(
//!     check_coboundary_conditions(&r).classification,
//!     Classification::Triangular,
//! );
//!
//! // e1⊗e2 − e2⊗e1 does not: [[r,r]] = 3·e2⊗e2⊗e2
//! let r = fixtures::r_e1e2();
//! let bracket = yb_bracket(&r);
//! assert_eq!(*bracket.get(1, 1, 1), mocklie::scalar::int(3));
//! ```

pub mod algebra;
pub mod bialgebra;
pub mod error;
pub mod generate;
pub mod matrix;
pub mod prelie;
pub mod rep;
pub mod scalar;
pub mod tensor;
pub mod ybe;

pub use algebra::{
    from_anti_associative, random_central_extension, validate_mock_lie, AxiomReport,
    MockLieAlgebra, StructureConstants,
};
pub use error::Error;
pub use matrix::Matrix;
pub use scalar::{format_scalar, parse_scalar, Scalar};
pub use tensor::{FactorMap, Tensor2, Tensor3};

/// Small well-known instances shared by the test suites and the bundled
/// fixture corpus.
pub mod fixtures {
    use crate::algebra::{MockLieAlgebra, StructureConstants};
    use crate::bialgebra::Cobracket;
    use crate::matrix::Matrix;
    use crate::prelie::MockPreLieAlgebra;
    use crate::rep::BilinearForm;
    use crate::scalar::int;
    use crate::tensor::Tensor2;
    use crate::ybe::RTensor;

    /// Dim-4 algebra with e1∘e1 = e2 and e1∘e3 = e4.
    pub fn a4() -> MockLieAlgebra {
        let mut sc = StructureConstants::zeros(4);
        sc.set(0, 0, 1, int(1));
        sc.set(0, 2, 3, int(1));
        sc.set(2, 0, 3, int(1));
        MockLieAlgebra::new(sc).expect("fixture is a mock-Lie algebra")
    }

    /// Dim-2 algebra with e1∘e1 = e2.
    pub fn a2() -> MockLieAlgebra {
        let mut sc = StructureConstants::zeros(2);
        sc.set(0, 0, 1, int(1));
        MockLieAlgebra::new(sc).expect("fixture is a mock-Lie algebra")
    }

    /// Dim-2 mock-pre-Lie algebra with e1·e1 = e2.
    pub fn p2() -> MockPreLieAlgebra {
        let mut sc = StructureConstants::zeros(2);
        sc.set(0, 0, 1, int(1));
        MockPreLieAlgebra::new(sc).expect("fixture is mock-pre-Lie")
    }

    /// Symmetric invariant nondegenerate form on a4 pairing e1 with e4 and
    /// e2 with e3.
    pub fn a4_hyperbolic_form() -> BilinearForm {
        let mut gram = Matrix::zeros(4, 4);
        gram.set(0, 3, int(1));
        gram.set(3, 0, int(1));
        gram.set(1, 2, int(1));
        gram.set(2, 1, int(1));
        BilinearForm::new(a4(), gram).expect("gram matches the algebra dim")
    }

    /// Symplectic form on a4: ω(e1,e4) = 1, ω(e2,e3) = 2, skew.
    pub fn a4_symplectic_form() -> BilinearForm {
        let mut gram = Matrix::zeros(4, 4);
        gram.set(0, 3, int(1));
        gram.set(3, 0, int(-1));
        gram.set(1, 2, int(2));
        gram.set(2, 1, int(-2));
        BilinearForm::new(a4(), gram).expect("gram matches the algebra dim")
    }

    /// r = e1⊗e2 − e2⊗e1 over a4: skew, coboundary-admissible, but not a
    /// Yang-Baxter solution.
    pub fn r_e1e2() -> RTensor {
        RTensor::from_entries(a4(), &[(0, 1, int(1)), (1, 0, int(-1))])
            .expect("entries in range")
    }

    /// r = e2⊗e4 − e4⊗e2 over a4: a triangular Yang-Baxter solution.
    pub fn r_e2e4() -> RTensor {
        RTensor::from_entries(a4(), &[(1, 3, int(1)), (3, 1, int(-1))])
            .expect("entries in range")
    }

    /// The coboundary cobracket of r_e1e2 on a4, written out explicitly:
    /// Δ(e1) = 2e2⊗e2, Δ(e3) = e2⊗e4 + e4⊗e2, Δ(e2) = Δ(e4) = 0.
    pub fn a4_bialgebra_cobracket() -> Cobracket {
        let mut d1 = Tensor2::zeros(4, 4);
        d1.set(1, 1, int(2));
        let mut d3 = Tensor2::zeros(4, 4);
        d3.set(1, 3, int(1));
        d3.set(3, 1, int(1));
        let images = vec![d1, Tensor2::zeros(4, 4), d3, Tensor2::zeros(4, 4)];
        Cobracket::new(a4(), images).expect("images live in A⊗A")
    }

    /// A nontrivial bialgebra cobracket on a2: Δ(e1) = e2⊗e2, Δ(e2) = 0.
    pub fn a2_bialgebra_cobracket() -> Cobracket {
        let mut d1 = Tensor2::zeros(2, 2);
        d1.set(1, 1, int(1));
        Cobracket::new(a2(), vec![d1, Tensor2::zeros(2, 2)]).expect("images live in A⊗A")
    }
}
