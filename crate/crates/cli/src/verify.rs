use jones_core::arith::rational::q;
use jones_core::arith::RationalSpan;
use jones_core::expansion::{delta_k, expected_delta1_psi0};
use jones_core::jones::{
    check_minus_one_equivalence, psi0_closed_form, relation_checks, rho_evaluate, rho_specialize,
};
use jones_core::sp4::{
    bracket_module, end_vector, graded_identification, identify_module, table1, table2, weight_of,
    weight_table, Gamma, Submodule, Weight, END_DIM,
};
use jones_core::words::{Generator, GroupWord};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::commands::{
    gamma02, labels_text, lower_central_check, orbit_span_check, quotient_check, CliError,
    FULL_DECOMPOSITION, TABLE1_DIMS, TABLE2_DIMS,
};
use crate::config::RunConfig;
use crate::report::{Check, Report, Source};

fn holds(name: impl Into<String>, source: Source, ok: bool) -> Check {
    Check::compare(name, source, "holds", if ok { "holds" } else { "fails" })
}

fn dims(d: &[usize]) -> String {
    d.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

const SEEDED_SAMPLES: usize = 4;

fn random_word(rng: &mut ChaCha8Rng) -> GroupWord {
    let gens: Vec<Generator> = Generator::all().collect();
    let len = rng.gen_range(1..=3);
    GroupWord::new((0..len).map(|_| gens[rng.gen_range(0..gens.len())]))
}

/// `δ_1(uv) = δ_1(u) + δ_1(v)` for seeded random conjugates `u, v` of `ψ0`.
fn seeded_additivity(seed: u64) -> Result<usize, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let psi = GroupWord::psi0();
    let mut good = 0;
    for _ in 0..SEEDED_SAMPLES {
        let u = psi.conjugated_by(&random_word(&mut rng));
        let v = psi.conjugated_by(&random_word(&mut rng));
        let lhs = delta_k(&u.concat(&v), 1)?;
        let rhs = delta_k(&u, 1)?.add(&delta_k(&v, 1)?)?;
        good += usize::from(lhs == rhs);
    }
    Ok(good)
}

/// Runs every check in a fixed order.
pub fn verify_all(config: &RunConfig) -> Result<Report, CliError> {
    config.validate()?;
    let mut report = Report::new(vec!["verify".into()], config.clone());
    let checks = &mut report.checks;

    for (name, ok) in relation_checks() {
        checks.push(holds(format!("relation {name}"), Source::Published, ok));
    }

    let psi = GroupWord::psi0();
    checks.push(holds(
        "rho(psi0) closed form",
        Source::Published,
        rho_evaluate(&psi) == psi0_closed_form(),
    ));
    for t in [1, -1] {
        let ok = rho_specialize(&psi, &q(t))?.is_identity();
        checks.push(holds(
            format!("rho(psi0) at t = {t} is the identity"),
            Source::Published,
            ok,
        ));
    }

    let eq = check_minus_one_equivalence();
    checks.push(holds("P(z1) F = -F Z", Source::Published, eq.zeta_holds));
    checks.push(holds("P(xi) F = -F X", Source::Published, eq.xi_holds));

    let d1 = delta_k(&psi, 1)?;
    checks.push(holds(
        "delta_1(psi0) = F diag(6,6,-24,6,6) F^-1",
        Source::Published,
        d1.matrix == expected_delta1_psi0(),
    ));
    let v = graded_identification(&d1);
    let expected = end_vector(&[
        (-24, 3, 3),
        (12, 1, 1),
        (12, 2, 2),
        (-6, 1, 1),
        (-6, 2, 2),
        (6, 4, 4),
        (6, 5, 5),
    ]);
    let g02 = gamma02()?;
    checks.push(holds(
        "identification of delta_1(psi0)",
        Source::Published,
        v == expected,
    ));
    checks.push(holds(
        "identified class is a weight-0 vector of Gamma_{0,2}",
        Source::Published,
        weight_of(&v) == Some(Weight::ZERO) && g02.contains(&v),
    ));

    for (label, module, published, expected_dims) in [
        ("Table 1", Submodule::full(), table1(), TABLE1_DIMS),
        ("Table 2", g02.clone(), table2(), TABLE2_DIMS),
    ] {
        let t = weight_table(&module)?;
        let actual: Vec<usize> = t.rows.iter().map(|(_, s)| s.dim()).collect();
        checks.push(Check::compare(
            format!("{label} dimensions"),
            Source::Published,
            dims(&expected_dims),
            dims(&actual),
        ));
        let spans = published.iter().all(|(w, vs)| {
            t.get(*w)
                .is_some_and(|s| *s == RationalSpan::from_vectors(END_DIM, vs))
        });
        checks.push(holds(format!("{label} spans"), Source::Published, spans));
    }
    checks.push(Check::compare(
        "Gamma_{0,2} dimension",
        Source::Published,
        14,
        g02.dim(),
    ));

    let full = identify_module(&Submodule::full())?;
    checks.push(Check::compare(
        "End decomposition",
        Source::Published,
        labels_text(&FULL_DECOMPOSITION),
        &full,
    ));

    let b = bracket_module(&g02, &g02)?;
    let bt = weight_table(&b)?;
    let bracket_dims = [Weight::new(2, 2), Weight::new(2, 0), Weight::ZERO].map(|w| bt.dim_of(w));
    checks.push(Check::compare(
        "[Gamma_{0,2}, Gamma_{0,2}] at 2(L1+L2), 2L1, 0",
        Source::Published,
        "0,1,2",
        dims(&bracket_dims),
    ));
    let g20 = Gamma { a: 2, b: 0 };
    let g02_label = Gamma { a: 0, b: 2 };
    checks.push(Check::compare(
        "[Gamma_{0,2}, Gamma_{0,2}]",
        Source::Published,
        labels_text(&[g20]),
        identify_module(&b)?,
    ));
    let c = bracket_module(&g02, &b)?;
    checks.push(Check::compare(
        "[Gamma_{0,2}, Gamma_{2,0}]",
        Source::Published,
        labels_text(&[g02_label]),
        identify_module(&c)?,
    ));

    let (a_check, a_value, _) = orbit_span_check(config.span_depth)?;
    checks.push(a_check);
    let (b_check, b_value, _) = lower_central_check(config.max_k)?;
    checks.push(b_check);

    let (q1, q1_value, _, o1) = quotient_check(config, 1)?;
    let (q2, q2_value, _, o2) = quotient_check(config, 2)?;
    checks.push(q1);
    checks.push(q2);
    let divides = matches!((o1, o2), (Some(a), Some(b)) if b % a == 0);
    checks.push(holds(
        "degree-1 order divides degree-2 order",
        Source::Structural,
        divides,
    ));

    let good = seeded_additivity(config.seed)?;
    checks.push(Check::compare(
        "delta_1 additive on seeded conjugates of psi0",
        Source::Structural,
        format!("{SEEDED_SAMPLES}/{SEEDED_SAMPLES}"),
        format!("{good}/{SEEDED_SAMPLES}"),
    ));

    let passed = report.checks.iter().filter(|c| c.pass).count();
    report.results = json!({
        "checks": report.checks.len(),
        "passed": passed,
        "orbit_span": a_value,
        "lower_central_series": b_value,
        "quotient_degree1": q1_value,
        "quotient_degree2": q2_value,
    });
    Ok(report)
}
