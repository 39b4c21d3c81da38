//! The acceptance criteria, one PASS/FAIL line each.

use std::panic::{catch_unwind, AssertUnwindSafe};

use jones_core::arith::{BigInt, BigRational, LaurentPoly, RationalSpan, SquareMatrix};
use jones_core::expansion::{conjugation_action, delta_k, phi_from_rho, phi_truncated};
use jones_core::jones::{f_matrix, relation_checks, rho_evaluate, rho_specialize};
use jones_core::quotients::{cyclic_order_degree1, cyclic_order_degree2, hnf, CyclicOrder};
use jones_core::sp4::{
    bracket_module, e, end_vector, graded_identification, highest_weight_submodule,
    identify_module, lower_central_series, orbit_span, table1, table2, wedge_action, weight_of,
    weight_table, Gamma, Submodule, Weight, END_DIM, TABLE_WEIGHT_ORDER,
};
use jones_core::words::{parse_word, symplectic_action, Generator, GroupWord};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestRunner};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl Into<String>) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn q(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

fn t(e: i64) -> LaurentPoly {
    LaurentPoly::monomial(1, e)
}

const G02: Gamma = Gamma { a: 0, b: 2 };
const G20: Gamma = Gamma { a: 2, b: 0 };
const G00: Gamma = Gamma { a: 0, b: 0 };

fn gamma02() -> Submodule {
    highest_weight_submodule(&e(1, 2)).unwrap()
}

fn f_literal() -> SquareMatrix<BigRational> {
    let rows = [
        [0, -1, 0, 0, 0],
        [0, 0, 0, 0, -1],
        [1, 0, 0, 0, 0],
        [0, 0, 1, 1, -1],
        [0, 0, 0, 1, 0],
    ];
    SquareMatrix::from_fn(5, |i, j| q(rows[i][j]))
}

fn relations() -> Outcome {
    let failed: Vec<String> = relation_checks()
        .into_iter()
        .filter(|(_, ok)| !ok)
        .map(|(n, _)| n)
        .collect();
    ensure(failed.is_empty(), format!("failing relations: {failed:?}"))?;
    let r = |s: &str| rho_evaluate(&parse_word(s).unwrap());
    ensure(r("z1 z2 z1") == r("z2 z1 z2"), "braid z1 z2")?;
    ensure(r("z2 z4") == r("z4 z2"), "commutation z2 z4")?;
    ensure(
        r("xi^6").is_identity() && !r("xi^2").is_identity() && !r("xi^3").is_identity(),
        "xi has order 6",
    )?;
    let iota = r("iota");
    ensure((&iota * &iota).is_identity(), "iota^2")?;
    ensure(
        &iota * &r("xi") == &r("xi") * &iota,
        "iota commutes with xi",
    )
}

fn psi0_closed_form() -> Outcome {
    // t^6 Id + (t^15 + 1)/t^24 * N with N nonzero only in row 4.
    let one = LaurentPoly::one();
    let n_row = [
        &t(10) - &one,
        &t(5) - &t(10),
        &t(10) - &one,
        &one - &t(15),
        &t(5) - &t(10),
    ];
    let factor = &(&t(15) + &one) * &t(-24);
    let expected = SquareMatrix::from_fn(5, |i, j| {
        let d = if i == j { t(6) } else { LaurentPoly::zero() };
        if i == 3 {
            &d + &(&factor * &n_row[j])
        } else {
            d
        }
    });
    let psi0 = GroupWord::psi0();
    ensure(
        parse_word("(z1 z2 z1)^4").map(|w| rho_evaluate(&w)) == Ok(expected.clone()),
        "rho((z1 z2 z1)^4)",
    )?;
    ensure(
        rho_evaluate(&psi0) == expected,
        "rho(psi0) differs from the closed form",
    )?;
    for v in [1, -1] {
        ensure(
            rho_specialize(&psi0, &q(v)).unwrap().is_identity(),
            format!("rho(psi0) at t = {v}"),
        )?;
    }
    Ok(())
}

fn minus_one_equivalence() -> Outcome {
    let f = f_literal();
    ensure(
        f_matrix().to_rational() == f,
        "F differs from the published matrix",
    )?;
    for name in ["z1", "xi"] {
        let w = parse_word(name).unwrap();
        let p = rho_specialize(&w, &q(-1)).unwrap();
        let action = wedge_action(symplectic_action(&w).matrix()).to_rational();
        ensure(
            &p * &f == (&f * &action).neg(),
            format!("P({name}) F != -F W({name})"),
        )?;
    }
    Ok(())
}

fn delta1_identification() -> Outcome {
    let f = f_literal();
    let d = SquareMatrix::diagonal([6, 6, -24, 6, 6].map(q).to_vec());
    let expected = &(&f * &d) * &f.inverse().unwrap();
    let delta = delta_k(&GroupWord::psi0(), 1).map_err(|e| e.to_string())?;
    ensure(
        delta.matrix == expected,
        "delta_1(psi0) != F diag(6,6,-24,6,6) F^-1",
    )?;
    // -12(2e33 - (e11 + e22)) - 6((e11 + e22) - (e44 + e55)).
    let target = end_vector(&[
        (-24, 3, 3),
        (12, 1, 1),
        (12, 2, 2),
        (-6, 1, 1),
        (-6, 2, 2),
        (6, 4, 4),
        (6, 5, 5),
    ]);
    let v = graded_identification(&delta);
    ensure(v == target, "identified vector differs")?;
    ensure(weight_of(&v) == Some(Weight::ZERO), "not of weight 0")?;
    ensure(gamma02().contains(&v), "not in Gamma_{0,2}")
}

fn tables() -> Outcome {
    let full = weight_table(&Submodule::full()).map_err(|e| e.to_string())?;
    let weights: Vec<Weight> = full.rows.iter().map(|(w, _)| *w).collect();
    ensure(
        weights == TABLE_WEIGHT_ORDER.to_vec() && weights.len() == 13,
        "Table 1 weights",
    )?;
    let dims: Vec<usize> = full.rows.iter().map(|(_, s)| s.dim()).collect();
    ensure(
        dims == [1, 2, 2, 2, 1, 2, 5, 2, 1, 2, 2, 2, 1],
        format!("Table 1 dims {dims:?}"),
    )?;
    for (w, vs) in table1() {
        ensure(
            full.get(w) == Some(&RationalSpan::from_vectors(END_DIM, &vs)),
            format!("Table 1 span at {w}"),
        )?;
    }
    let g = weight_table(&gamma02()).map_err(|e| e.to_string())?;
    ensure(g.total() == 14, format!("Table 2 total {}", g.total()))?;
    for (w, vs) in table2() {
        ensure(
            g.get(w) == Some(&RationalSpan::from_vectors(END_DIM, &vs)),
            format!("Table 2 span at {w}"),
        )?;
    }
    Ok(())
}

fn decomposition() -> Outcome {
    let d = identify_module(&Submodule::full()).map_err(|e| e.to_string())?;
    ensure(d.is(&[G02, G20, G00]), format!("got {d}"))?;
    let dims: Vec<usize> = d.labels().iter().map(|g| g.dim()).collect();
    ensure(dims == [14, 10, 1], format!("dims {dims:?}"))
}

fn brackets() -> Outcome {
    let g = gamma02();
    let b = bracket_module(&g, &g).map_err(|e| e.to_string())?;
    let t = weight_table(&b).map_err(|e| e.to_string())?;
    let dims = [Weight::new(2, 2), Weight::new(2, 0), Weight::ZERO].map(|w| t.dim_of(w));
    ensure(dims == [0, 1, 2], format!("weight dims {dims:?}"))?;
    let d = identify_module(&b).map_err(|e| e.to_string())?;
    ensure(d.is(&[G20]), format!("[G02, G02] = {d}"))?;
    let c = bracket_module(&g, &b).map_err(|e| e.to_string())?;
    let d = identify_module(&c).map_err(|e| e.to_string())?;
    ensure(d.is(&[G02]), format!("[G02, G20] = {d}"))
}

fn orbit_span_criterion() -> Outcome {
    let r = orbit_span(4).map_err(|e| e.to_string())?;
    ensure(
        r.stable,
        format!("span not stable after word length {}", r.depth),
    )?;
    ensure(r.span.dim() == 14, format!("span dim {}", r.span.dim()))?;
    ensure(&r.span == gamma02().span(), "span differs from Gamma_{0,2}")
}

fn lower_central_alternation() -> Outcome {
    let r = lower_central_series(6).map_err(|e| e.to_string())?;
    for (k, _, d) in r.rows.iter().filter(|(k, _, _)| *k >= 2) {
        let expected = if k % 2 == 0 { G20 } else { G02 };
        ensure(d.is(&[expected]), format!("C_{k} = {d}"))?;
    }
    ensure(r.rows.len() == 6, "missing rows")
}

fn quotient_orders() -> Outcome {
    let o1 = cyclic_order_degree1(6, 200)
        .map_err(|e| e.to_string())?
        .order;
    let o2 = cyclic_order_degree2(1, 200)
        .map_err(|e| e.to_string())?
        .order;
    ensure(
        o1 == CyclicOrder::Finite(10),
        format!("degree 1 order {o1}"),
    )?;
    ensure(
        o2 == CyclicOrder::Finite(10),
        format!("degree 2 order {o2}"),
    )?;
    ensure(
        o2.finite().unwrap() % o1.finite().unwrap() == 0,
        "degree-1 order does not divide degree-2 order",
    )
}

fn runner(seed: u64) -> TestRunner {
    TestRunner::new(Config {
        cases: 200,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..Config::default()
    })
}

fn word(max_len: usize) -> impl Strategy<Value = GroupWord> {
    let gens: Vec<Generator> = Generator::all().collect();
    prop::collection::vec(0..gens.len(), 0..=max_len)
        .prop_map(move |idx| GroupWord::new(idx.into_iter().map(|i| gens[i])))
}

fn degree1() -> impl Strategy<Value = GroupWord> {
    word(3).prop_map(|g| GroupWord::psi0().conjugated_by(&g))
}

fn fail<T: std::fmt::Debug>(name: &str, e: proptest::test_runner::TestError<T>) -> String {
    format!("{name}: {e}")
}

fn property_suites() -> Outcome {
    runner(11)
        .run(&(degree1(), degree1()), |(u, v)| {
            let lhs = delta_k(&u.concat(&v), 1).unwrap();
            let rhs = delta_k(&u, 1)
                .unwrap()
                .add(&delta_k(&v, 1).unwrap())
                .unwrap();
            prop_assert_eq!(lhs, rhs);
            Ok(())
        })
        .map_err(|e| fail("additivity", e))?;
    runner(12)
        .run(&(degree1(), degree1()), |(u, v)| {
            let x = GroupWord::commutator(&u, &v);
            let y = GroupWord::commutator(&v, &u.inverse());
            let lhs = delta_k(&x.concat(&y), 2).unwrap();
            let rhs = delta_k(&x, 2)
                .unwrap()
                .add(&delta_k(&y, 2).unwrap())
                .unwrap();
            prop_assert_eq!(lhs, rhs);
            Ok(())
        })
        .map_err(|e| fail("degree-2 additivity", e))?;
    runner(13)
        .run(&(degree1(), degree1()), |(u, v)| {
            let lhs = delta_k(&GroupWord::commutator(&u, &v), 2).unwrap();
            let rhs = delta_k(&u, 1).unwrap().bracket(&delta_k(&v, 1).unwrap());
            prop_assert_eq!(lhs, rhs);
            Ok(())
        })
        .map_err(|e| fail("bracket formula", e))?;
    runner(14)
        .run(&(degree1(), word(3)), |(u, g)| {
            let lhs = delta_k(&u.conjugated_by(&g), 1).unwrap();
            let rhs = conjugation_action(&g, &delta_k(&u, 1).unwrap());
            prop_assert_eq!(lhs, rhs);
            Ok(())
        })
        .map_err(|e| fail("equivariance", e))?;
    runner(15)
        .run(&(word(6), word(6)), |(u, v)| {
            let lhs = symplectic_action(&u.concat(&v));
            let rhs = symplectic_action(&u).matrix() * symplectic_action(&v).matrix();
            prop_assert_eq!(lhs.matrix(), &rhs);
            Ok(())
        })
        .map_err(|e| fail("symplectic homomorphism", e))?;
    runner(16)
        .run(
            &(
                prop::collection::vec(prop::collection::vec(-5i64..=5, 3), 3),
                prop::collection::vec(-9i64..=9, 3),
            ),
            |(rows, v)| {
                let a = SquareMatrix::from_fn(3, |i, j| q(rows[i][j]));
                let inv = a.inverse();
                prop_assume!(inv.is_some());
                let inv = inv.unwrap();
                let oracle = (0..3).all(|j| {
                    (0..3)
                        .map(|i| q(v[i]) * inv.get(i, j))
                        .fold(q(0), |s, x| s + x)
                        .is_integer()
                });
                let lattice = hnf(
                    3,
                    &rows
                        .iter()
                        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                        .collect::<Vec<_>>(),
                );
                let v: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
                prop_assert_eq!(lattice.contains(&v), oracle);
                Ok(())
            },
        )
        .map_err(|e| fail("HNF oracle", e))?;
    runner(17)
        .run(&word(5), |w| {
            let high = phi_truncated(&w, 3);
            prop_assert_eq!(&high, &phi_from_rho(&w, 3));
            prop_assert_eq!(high.map(|s| s.truncate(2)), phi_truncated(&w, 2));
            Ok(())
        })
        .map_err(|e| fail("truncation consistency", e))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("relations hold exactly", relations),
        (
            "rho(psi0) closed form and t = +-1 triviality",
            psi0_closed_form,
        ),
        ("t = -1 equivalence with F", minus_one_equivalence),
        (
            "delta_1(psi0) and its identification",
            delta1_identification,
        ),
        ("weight tables", tables),
        ("End decomposition 14 + 10 + 1", decomposition),
        ("bracket computations", brackets),
        ("orbit span is Gamma_{0,2}", orbit_span_criterion),
        (
            "lower central series alternation",
            lower_central_alternation,
        ),
        ("quotient orders 10 and 10", quotient_orders),
        ("seeded property suites", property_suites),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(msg)
        });
        match outcome {
            Ok(()) => println!("PASS  {:>2}. {name}", i + 1),
            Err(reason) => {
                failures += 1;
                println!("FAIL  {:>2}. {name}: {reason}", i + 1);
            }
        }
    }
    println!(
        "{}/{} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
