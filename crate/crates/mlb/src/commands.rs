//! Verb dispatch: each command loads what it needs from the bundle, runs
//! the corresponding library operation, and renders a report.
//!
//! Objects a command merely *uses* must be valid at load time (an input
//! error, exit 2); the object a command *checks* is allowed to be invalid —
//! that is a mathematical failure reported with a witness (exit 1).

use std::collections::BTreeMap;

use mocklie::algebra::validate_mock_lie;
use mocklie::bialgebra::{
    bicrossed_product, check_cocycle_compatibility, check_manin_triple, check_matched_pair,
    double, dual_structure, standard_manin_data, standard_matched_pair, validate_bialgebra,
};
use mocklie::prelie::{check_o_operator, prelie_from_symplectic, validate_mock_pre_lie};
use mocklie::rep::{check_invariant_form, check_symplectic_form, validate_representation};
use mocklie::ybe::{
    canonical_solution_from_prelie, check_coboundary_conditions, check_ybe_operator_form,
    coboundary_cobracket, lift_o_operator, rota_baxter_correspondence, yb_bracket,
};

use crate::bundle::{self, BundleFile};
use crate::report::{
    check, check_with, matrix_witness, scalar_witness, tensor2_witness, tensor3_witness,
    vector_witness, Report,
};
use crate::CliError;

pub const VERBS: &[&str] = &[
    "check-algebra",
    "check-rep",
    "check-prelie",
    "check-o-operator",
    "semidirect",
    "sub-adjacent",
    "cobracket",
    "check-bialgebra",
    "check-matched-pair",
    "bicrossed",
    "check-manin",
    "double",
    "ybe",
    "ybe-operator-form",
    "lift",
    "canonical-solution",
    "rota-baxter-corr",
    "check-form",
    "prelie-from-symplectic",
];

pub struct Ctx<'a> {
    pub bundle: &'a BundleFile,
    pub r_name: Option<&'a str>,
    pub rep_name: Option<&'a str>,
    pub t_name: Option<&'a str>,
    pub form_name: Option<&'a str>,
    pub verbose: bool,
}

pub fn run(verb: &str, ctx: &Ctx) -> Result<Report, CliError> {
    match verb {
        "check-algebra" => check_algebra(ctx),
        "check-rep" => check_rep(ctx),
        "check-prelie" => check_prelie(ctx),
        "check-o-operator" => check_o_operator_cmd(ctx),
        "semidirect" => semidirect(ctx),
        "sub-adjacent" => sub_adjacent(ctx),
        "cobracket" => cobracket_cmd(ctx),
        "check-bialgebra" => check_bialgebra(ctx),
        "check-matched-pair" => check_matched_pair_cmd(ctx),
        "bicrossed" => bicrossed(ctx),
        "check-manin" => check_manin(ctx),
        "double" => double_cmd(ctx),
        "ybe" => ybe(ctx),
        "ybe-operator-form" => ybe_operator_form(ctx),
        "lift" => lift(ctx),
        "canonical-solution" => canonical_solution(ctx),
        "rota-baxter-corr" => rota_baxter_corr(ctx),
        "check-form" => check_form(ctx),
        "prelie-from-symplectic" => prelie_from_symplectic_cmd(ctx),
        other => Err(CliError::UnknownVerb(other.to_string())),
    }
}

fn check_algebra(ctx: &Ctx) -> Result<Report, CliError> {
    let (name, spec) = bundle::pick(&ctx.bundle.algebra, "algebra", None)?;
    let sc = bundle::algebra_constants(name, spec)?;
    let report = validate_mock_lie(&sc);
    let witness = report
        .first_violation
        .as_ref()
        .map(|v| vector_witness(&v.triple, &v.residual, ctx.verbose));
    let (comm_witness, jac_witness) = if report.commutative {
        (None, witness)
    } else {
        (witness, None)
    };
    let mut rep = Report::new(
        "check-algebra",
        vec![
            check_with("commutative", report.commutative, comm_witness),
            check_with("jacobi", report.jacobi, jac_witness),
        ],
    )
    .with_detail("algebra", name)
    .with_detail("dim", spec.dim.to_string());
    if ctx.verbose && !report.jacobi {
        // exhaustive listing of failing triples
        let n = sc.dim();
        let mut failing = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let basis =
                        |idx: usize| -> Vec<mocklie::Scalar> {
                            let mut v = vec![mocklie::scalar::int(0); n];
                            v[idx] = mocklie::scalar::int(1);
                            v
                        };
                    let mut sum = sc
                        .multiply(&basis(i), &sc.multiply(&basis(j), &basis(k)).unwrap())
                        .unwrap();
                    for (r, v) in sc
                        .multiply(&basis(j), &sc.multiply(&basis(k), &basis(i)).unwrap())
                        .unwrap()
                        .into_iter()
                        .enumerate()
                    {
                        sum[r] += v;
                    }
                    for (r, v) in sc
                        .multiply(&basis(k), &sc.multiply(&basis(i), &basis(j)).unwrap())
                        .unwrap()
                        .into_iter()
                        .enumerate()
                    {
                        sum[r] += v;
                    }
                    if sum.iter().any(|c| !mocklie::scalar::is_zero(c)) {
                        failing.push(format!("({},{},{})", i + 1, j + 1, k + 1));
                    }
                }
            }
        }
        rep = rep.with_detail("jacobi_failing_triples", failing.join(" "));
    }
    Ok(rep)
}

fn check_rep(ctx: &Ctx) -> Result<Report, CliError> {
    let (alg_name, algebra) = bundle::validated_algebra(ctx.bundle)?;
    let (name, spec) = bundle::pick(&ctx.bundle.representation, "representation", ctx.rep_name)?;
    let action = bundle::rep_action(name, spec, &algebra)?;
    let report = validate_representation(&algebra, &action)
        .map_err(|e| CliError::Validation(format!("representation {name:?}: {e}")))?;
    let witness = report
        .first_violation
        .as_ref()
        .map(|v| matrix_witness(&v.pair, &v.residual, ctx.verbose));
    Ok(
        Report::new("check-rep", vec![check_with("representation", report.valid, witness)])
            .with_detail("algebra", alg_name)
            .with_detail("representation", name),
    )
}

fn check_prelie(ctx: &Ctx) -> Result<Report, CliError> {
    let (name, spec) = bundle::pick(&ctx.bundle.prelie, "prelie", None)?;
    let sc = bundle::prelie_constants(name, spec)?;
    let report = validate_mock_pre_lie(&sc);
    let witness = report
        .first_violation
        .as_ref()
        .map(|v| vector_witness(&v.triple, &v.residual, ctx.verbose));
    Ok(
        Report::new("check-prelie", vec![check_with("pre_lie", report.valid, witness)])
            .with_detail("prelie", name),
    )
}

fn check_o_operator_cmd(ctx: &Ctx) -> Result<Report, CliError> {
    let (alg_name, algebra) = bundle::validated_algebra(ctx.bundle)?;
    let (rep_name, rep) = bundle::representation(ctx.bundle, &algebra, ctx.rep_name)?;
    let (t_name, t) = bundle::linear_map(ctx.bundle, ctx.t_name)?;
    let report = check_o_operator(&rep, &t)
        .map_err(|e| CliError::Validation(format!("linear_map {t_name:?}: {e}")))?;
    let witness = report
        .first_violation
        .as_ref()
        .map(|v| vector_witness(&v.pair, &v.residual, ctx.verbose));
    Ok(
        Report::new("check-o-operator", vec![check_with("o_operator", report.valid, witness)])
            .with_detail("algebra", alg_name)
            .with_detail("representation", rep_name)
            .with_detail("map", t_name)
            .with_detail("rota_baxter", report.rota_baxter.to_string()),
    )
}

fn semidirect(ctx: &Ctx) -> Result<Report, CliError> {
    let (alg_name, algebra) = bundle::validated_algebra(ctx.bundle)?;
    let (rep_name, rep) = bundle::representation(ctx.bundle, &algebra, ctx.rep_name)?;
    let product = rep.semidirect();
    let valid = validate_mock_lie(product.structure()).valid();
    let mut out = BundleFile::default();
    out.algebra
        .insert("semidirect".to_string(), bundle::algebra_to_spec(&product));
    Ok(Report::new("semidirect", vec![check("mock_lie", valid)])
        .with_detail("algebra", alg_name)
        .with_detail("representation", rep_name)
        .with_detail("dim", product.dim().to_string())
        .with_bundle(out))
}

fn sub_adjacent(ctx: &Ctx) -> Result<Report, CliError> {
    let (name, p) = bundle::validated_prelie(ctx.bundle)?;
    let (algebra, theta) = p.sub_adjacent();
    let algebra_valid = validate_mock_lie(algebra.structure()).valid();
    let theta_valid = validate_representation(theta.algebra(), theta.matrices())
        .map(|r| r.valid)
        .unwrap_or(false);
    let mut out = BundleFile::default();
    out.algebra
        .insert("sub_adjacent".to_string(), bundle::algebra_to_spec(&algebra));
    out.representation
        .insert("theta".to_string(), bundle::rep_to_spec(&theta));
    Ok(Report::new(
        "sub-adjacent",
        vec![
            check("mock_lie", algebra_valid),
            check("representation", theta_valid),
        ],
    )
    .with_detail("prelie", name)
    .with_bundle(out))
}

fn cobracket_cmd(ctx: &Ctx) -> Result<Report, CliError> {
    let (alg_name, algebra) = bundle::validated_algebra(ctx.bundle)?;
    let (r_name, r) = bundle::r_tensor(ctx.bundle, &algebra, ctx.r_name)?;
    let d = coboundary_cobracket(&r);
    let compat = check_cocycle_compatibility(&d);
    let mut out = BundleFile::default();
    out.cobracket
        .insert("coboundary".to_string(), bundle::cobracket_to_spec(&d));
    Ok(
        Report::new("cobracket", vec![check("compatible", compat.compatible)])
            .with_detail("algebra", alg_name)
            .with_detail("r_tensor", r_name)
            .with_bundle(out),
    )
}

fn check_bialgebra(ctx: &Ctx) -> Result<Report, CliError> {
    let (alg_name, algebra) = bundle::validated_algebra(ctx.bundle)?;
    let (d_name, d) = bundle::cobracket(ctx.bundle, &algebra)?;
    let report = validate_bialgebra(&d);
    let compat = check_cocycle_compatibility(&d);
    let dual = validate_mock_lie(&dual_structure(&d));
    let compat_witness = compat
        .first_violation
        .as_ref()
        .map(|v| tensor2_witness(&v.pair, &v.residual, ctx.verbose));
    let dual_witness = dual
        .first_violation
        .as_ref()
        .map(|v| vector_witness(&v.triple, &v.residual, ctx.verbose));
    Ok(Report::new(
        "check-bialgebra",
        vec![
            check("symmetric", report.symmetric),
            check_with("dual_jacobi", report.dual_jacobi, dual_witness),
            check_with("compatible", report.compatible, compat_witness),
        ],
    )
    .with_detail("algebra", alg_name)
    .with_detail("cobracket", d_name))
}

fn check_matched_pair_cmd(ctx: &Ctx) -> Result<Report, CliError> {
    let (alg_name, algebra) = bundle::validated_algebra(ctx.bundle)?;
    let (d_name, d) = bundle::cobracket(ctx.bundle, &algebra)?;
    let dual = validate_mock_lie(&dual_structure(&d));
    let base = Report::new(
        "check-matched-pair",
        match standard_matched_pair(&algebra, &d) {
            Ok(mp) => {
                let report = check_matched_pair(&mp);
                let witness = report.first_violation.as_ref().map(|v| {
                    vector_witness(&v.triple, &v.residual, ctx.verbose)
                });
                let (h_witness, a_witness) = match &report.first_violation {
                    Some(v) if v.identity == 0 => (witness, None),
                    Some(_) => (None, witness),
                    None => (None, None),
                };
                vec![
                    check("dual_mock_lie", true),
                    check_with("compat_on_dual", report.compat_on_h, h_witness),
                    check_with("compat_on_algebra", report.compat_on_a, a_witness),
                ]
            }
            Err(_) => {
                let witness = dual
                    .first_violation
                    .as_ref()
                    .map(|v| vector_witness(&v.triple, &v.residual, ctx.verbose));
                vec![
                    check_with("dual_mock_lie", false, witness),
                    check("compat_on_dual", false),
                    check("compat_on_algebra", false),
                ]
            }
        },
    );
    Ok(base
        .with_detail("algebra", alg_name)
        .with_detail("cobracket", d_name))
}

fn bicrossed(ctx: &Ctx) -> Result<Report, CliError> {
    let (alg_name, algebra) = bundle::validated_algebra(ctx.bundle)?;
    let (d_name, d) = bundle::cobracket(ctx.bundle, &algebra)?;
    let mut checks = Vec::new();
    let mut out_bundle = None;
    match standard_matched_pair(&algebra, &d) {
        Ok(mp) => {
            checks.push(check("dual_mock_lie", true));
            let pair_ok = check_matched_pair(&mp).valid();
            checks.push(check("matched_pair", pair_ok));
            match bicrossed_product(&mp) {
                Ok(product) => {
                    checks.push(check("mock_lie", true));
                    let mut out = BundleFile::default();
                    out.algebra
                        .insert("bicrossed".to_string(), bundle::algebra_to_spec(&product));
                    out_bundle = Some(out);
                }
                Err(_) => checks.push(check("mock_lie", false)),
            }
        }
        Err(_) => {
            checks.push(check("dual_mock_lie", false));
            checks.push(check("matched_pair", false));
            checks.push(check("mock_lie", false));
        }
    }
    let mut report = Report::new("bicrossed", checks)
        .with_detail("algebra", alg_name)
        .with_detail("cobracket", d_name);
    if let Some(out) = out_bundle {
        report = report.with_bundle(out);
    }
    Ok(report)
}

fn check_manin(ctx: &Ctx) -> Result<Report, CliError> {
    let (alg_name, algebra) = bundle::validated_algebra(ctx.bundle)?;
    let (d_name, d) = bundle::cobracket(ctx.bundle, &algebra)?;
    let (checks, standard) = match standard_manin_data(&algebra, &d) {
        Ok(data) => {
            let report = check_manin_triple(&data)
                .map_err(|e| CliError::Validation(e.to_string()))?;
            (
                vec![
                    check("dual_mock_lie", true),
                    check("total_mock_lie", true),
                    check("plus_subalgebra", report.plus_subalgebra),
                    check("minus_subalgebra", report.minus_subalgebra),
                    check("plus_isotropic", report.plus_isotropic),
                    check("minus_isotropic", report.minus_isotropic),
                    check("form_symmetric", report.form_symmetric),
                    check("form_invariant", report.form_invariant),
                    check("form_nondegenerate", report.form_nondegenerate),
                ],
                report.standard,
            )
        }
        Err(_) => {
            // either the dual product is not an algebra or the bicrossed
            // total fails the axioms; report which stage survived
            let dual_valid = validate_mock_lie(&dual_structure(&d)).valid();
            (
                vec![
                    check("dual_mock_lie", dual_valid),
                    check("total_mock_lie", false),
                    check("plus_subalgebra", false),
                    check("minus_subalgebra", false),
                    check("plus_isotropic", false),
                    check("minus_isotropic", false),
                    check("form_symmetric", false),
                    check("form_invariant", false),
                    check("form_nondegenerate", false),
                ],
                false,
            )
        }
    };
    Ok(Report::new("check-manin", checks)
        .with_detail("algebra", alg_name)
        .with_detail("cobracket", d_name)
        .with_detail("standard", standard.to_string()))
}

fn double_cmd(ctx: &Ctx) -> Result<Report, CliError> {
    let (alg_name, algebra) = bundle::validated_algebra(ctx.bundle)?;
    let (d_name, d) = bundle::cobracket(ctx.bundle, &algebra)?;
    let bialgebra = validate_bialgebra(&d);
    let mut checks = vec![
        check("symmetric", bialgebra.symmetric),
        check("dual_jacobi", bialgebra.dual_jacobi),
        check("compatible", bialgebra.compatible),
    ];
    let mut out_bundle = None;
    if bialgebra.bialgebra() {
        let dbl = double(&algebra, &d).map_err(|e| CliError::Validation(e.to_string()))?;
        let bracket = yb_bracket(&dbl.canonical_r);
        checks.push(check_with(
            "yang_baxter",
            bracket.is_zero(),
            Some(tensor3_witness(&bracket, ctx.verbose)),
        ));
        let mut out = BundleFile::default();
        out.algebra
            .insert("double".to_string(), bundle::algebra_to_spec(&dbl.algebra));
        out.r_tensor.insert(
            "canonical_r".to_string(),
            bundle::tensor2_to_spec(dbl.canonical_r.tensor()),
        );
        out.cobracket.insert(
            "double_cobracket".to_string(),
            bundle::cobracket_to_spec(&dbl.cobracket),
        );
        out_bundle = Some(out);
    } else {
        checks.push(check("yang_baxter", false));
    }
    let mut report = Report::new("double", checks)
        .with_detail("algebra", alg_name)
        .with_detail("cobracket", d_name);
    if let Some(out) = out_bundle {
        report = report.with_bundle(out);
    }
    Ok(report)
}

fn ybe(ctx: &Ctx) -> Result<Report, CliError> {
    let (alg_name, algebra) = bundle::validated_algebra(ctx.bundle)?;
    let (r_name, r) = bundle::r_tensor(ctx.bundle, &algebra, ctx.r_name)?;
    let bracket = yb_bracket(&r);
    let report = check_coboundary_conditions(&r);
    Ok(Report::new(
        "ybe",
        vec![check_with(
            "yang_baxter",
            report.ybe,
            Some(tensor3_witness(&bracket, ctx.verbose)),
        )],
    )
    .with_detail("algebra", alg_name)
    .with_detail("r_tensor", r_name)
    .with_detail("skew", report.skew.to_string())
    .with_detail("coboundary_condition_symmetric_part", report.cond_i.to_string())
    .with_detail("coboundary_condition_q_bracket", report.cond_ii.to_string())
    .with_detail("classification", report.classification.as_str()))
}

fn ybe_operator_form(ctx: &Ctx) -> Result<Report, CliError> {
    let (alg_name, algebra) = bundle::validated_algebra(ctx.bundle)?;
    let (r_name, r) = bundle::r_tensor(ctx.bundle, &algebra, ctx.r_name)?;
    let checks = if !r.is_skew() {
        vec![check("skew", false), check("operator_identity", false)]
    } else {
        let report =
            check_ybe_operator_form(&r).map_err(|e| CliError::Validation(e.to_string()))?;
        let witness = report
            .first_violation
            .as_ref()
            .map(|v| vector_witness(&v.pair, &v.residual, ctx.verbose));
        vec![
            check("skew", true),
            check_with("operator_identity", report.valid, witness),
        ]
    };
    Ok(Report::new("ybe-operator-form", checks)
        .with_detail("algebra", alg_name)
        .with_detail("r_tensor", r_name))
}

fn lift(ctx: &Ctx) -> Result<Report, CliError> {
    let (alg_name, algebra) = bundle::validated_algebra(ctx.bundle)?;
    let (rep_name, rep) = bundle::representation(ctx.bundle, &algebra, ctx.rep_name)?;
    let (t_name, t) = bundle::linear_map(ctx.bundle, ctx.t_name)?;
    let o_report = check_o_operator(&rep, &t)
        .map_err(|e| CliError::Validation(format!("linear_map {t_name:?}: {e}")))?;
    let lifted = lift_o_operator(&rep, &t)
        .map_err(|e| CliError::Validation(format!("linear_map {t_name:?}: {e}")))?;
    let solves = lifted.bracket.is_zero();
    let o_witness = o_report
        .first_violation
        .as_ref()
        .map(|v| vector_witness(&v.pair, &v.residual, ctx.verbose));
    let mut out = BundleFile::default();
    out.algebra.insert(
        "semidirect_dual".to_string(),
        bundle::algebra_to_spec(&lifted.algebra),
    );
    out.r_tensor.insert(
        "lifted_r".to_string(),
        bundle::tensor2_to_spec(lifted.r.tensor()),
    );
    Ok(Report::new(
        "lift",
        vec![
            check_with("o_operator", o_report.valid, o_witness),
            check_with(
                "yang_baxter",
                solves,
                Some(tensor3_witness(&lifted.bracket, ctx.verbose)),
            ),
            check("agreement", o_report.valid == solves),
        ],
    )
    .with_detail("algebra", alg_name)
    .with_detail("representation", rep_name)
    .with_detail("map", t_name)
    .with_bundle(out))
}

fn canonical_solution(ctx: &Ctx) -> Result<Report, CliError> {
    let (name, p) = bundle::validated_prelie(ctx.bundle)?;
    let lifted = canonical_solution_from_prelie(&p);
    let mut out = BundleFile::default();
    out.algebra.insert(
        "semidirect_dual".to_string(),
        bundle::algebra_to_spec(&lifted.algebra),
    );
    out.r_tensor.insert(
        "canonical_r".to_string(),
        bundle::tensor2_to_spec(lifted.r.tensor()),
    );
    Ok(Report::new(
        "canonical-solution",
        vec![
            check("yang_baxter", lifted.bracket.is_zero()),
            check("skew", lifted.r.is_skew()),
        ],
    )
    .with_detail("prelie", name)
    .with_bundle(out))
}

fn rota_baxter_corr(ctx: &Ctx) -> Result<Report, CliError> {
    let (alg_name, algebra) = bundle::validated_algebra(ctx.bundle)?;
    let (r_name, r) = bundle::r_tensor(ctx.bundle, &algebra, ctx.r_name)?;
    let (form_name, form) = bundle::bilinear_form(ctx.bundle, &algebra, ctx.form_name)?;
    let skew = r.is_skew();
    let admissible = check_invariant_form(&form).admissible();
    let mut checks = vec![check("skew", skew), check("form_admissible", admissible)];
    let mut details: Vec<(&str, String)> = Vec::new();
    if skew && admissible {
        let corr = rota_baxter_correspondence(&r, &form)
            .map_err(|e| CliError::Validation(e.to_string()))?;
        checks.push(check("agreement", corr.agree));
        details.push(("yang_baxter", corr.ybe.to_string()));
        details.push(("rota_baxter", corr.rota_baxter.to_string()));
    }
    let mut report = Report::new("rota-baxter-corr", checks)
        .with_detail("algebra", alg_name)
        .with_detail("r_tensor", r_name)
        .with_detail("bilinear_form", form_name);
    for (k, v) in details {
        report = report.with_detail(k, v);
    }
    Ok(report)
}

fn check_form(ctx: &Ctx) -> Result<Report, CliError> {
    let (alg_name, algebra) = bundle::validated_algebra(ctx.bundle)?;
    let (form_name, form) = bundle::bilinear_form(ctx.bundle, &algebra, ctx.form_name)?;
    let inv = check_invariant_form(&form);
    let symp = check_symplectic_form(&form);
    let invariant_admissible = inv.admissible();
    let symplectic = symp.symplectic();
    let inv_witness = inv
        .first_violation
        .as_ref()
        .map(|v| scalar_witness(&v.triple, &v.residual));
    let classification = match (invariant_admissible, symplectic) {
        (true, _) => "invariant",
        (_, true) => "symplectic",
        _ => "neither",
    };
    Ok(Report::new(
        "check-form",
        vec![
            check("nondegenerate", inv.nondegenerate),
            check_with(
                "invariant_or_symplectic",
                invariant_admissible || symplectic,
                inv_witness,
            ),
        ],
    )
    .with_detail("algebra", alg_name)
    .with_detail("bilinear_form", form_name)
    .with_detail("symmetric", inv.symmetric.to_string())
    .with_detail("skew", symp.skew.to_string())
    .with_detail("invariant", inv.invariant.to_string())
    .with_detail("cyclic", symp.cyclic.to_string())
    .with_detail("classification", classification))
}

fn prelie_from_symplectic_cmd(ctx: &Ctx) -> Result<Report, CliError> {
    let (alg_name, algebra) = bundle::validated_algebra(ctx.bundle)?;
    let (form_name, form) = bundle::bilinear_form(ctx.bundle, &algebra, ctx.form_name)?;
    let symp = check_symplectic_form(&form);
    let cyclic_witness = symp
        .first_violation
        .as_ref()
        .map(|v| scalar_witness(&v.triple, &v.residual));
    let checks = vec![
        check("skew", symp.skew),
        check("nondegenerate", symp.nondegenerate),
        check_with("cyclic", symp.cyclic, cyclic_witness),
    ];
    let mut report = Report::new("prelie-from-symplectic", checks)
        .with_detail("algebra", alg_name)
        .with_detail("bilinear_form", form_name);
    if symp.symplectic() {
        let p = prelie_from_symplectic(&form).map_err(|e| CliError::Validation(e.to_string()))?;
        let mut out = BundleFile::default();
        out.prelie
            .insert("symplectic_prelie".to_string(), bundle::prelie_to_spec(&p));
        report = report.with_bundle(out);
    }
    Ok(report)
}

pub fn usage() -> String {
    let mut verbs: BTreeMap<&str, &str> = BTreeMap::new();
    verbs.insert("check-algebra", "validate the mock-Lie axioms of the bundle's algebra");
    verbs.insert("check-rep", "validate a representation against the algebra");
    verbs.insert("check-prelie", "validate the mock-pre-Lie identity");
    verbs.insert("check-o-operator", "check the O-operator identity for --T (rep defaults to the adjoint)");
    verbs.insert("semidirect", "build the semidirect product along --rep");
    verbs.insert("sub-adjacent", "symmetrize the prelie section into its mock-Lie algebra plus action");
    verbs.insert("cobracket", "build the coboundary cobracket of --r");
    verbs.insert("check-bialgebra", "check the bundle's cobracket for the three bialgebra properties");
    verbs.insert("check-matched-pair", "check the induced pair (A, A*) with coadjoint actions");
    verbs.insert("bicrossed", "build the bicrossed product A ⋈ A* of the cobracket");
    verbs.insert("check-manin", "check the standard Manin triple of the cobracket");
    verbs.insert("double", "build the double with its canonical element and cobracket");
    verbs.insert("ybe", "evaluate [[r,r]] and classify --r");
    verbs.insert("ybe-operator-form", "check the operator form of the Yang-Baxter equation for skew --r");
    verbs.insert("lift", "lift --T to r = T - tau(T) over A ⋉ V* and test both sides");
    verbs.insert("canonical-solution", "canonical Yang-Baxter solution of the prelie section");
    verbs.insert("rota-baxter-corr", "compare the Yang-Baxter check of --r with the Rota-Baxter check of r∘φ");
    verbs.insert("check-form", "classify --form (invariant / symplectic / neither)");
    verbs.insert("prelie-from-symplectic", "build the compatible pre-Lie product of a symplectic --form");
    let mut out = String::from("verbs:\n");
    for (verb, desc) in verbs {
        out.push_str(&format!("  {verb:<24}{desc}\n"));
    }
    out
}
