//! Reproduces the worked 49/34 example, the flip figure and the `B_{n,1}`
//! statements as a list of named pass/fail checks.

use serde::Serialize;

use crate::chain::{evaluate, expand, reduce_zero, zero_chain, Continuant, GeneralChain, HjChain};
use crate::dot::{delta_half, delta_position, dual_from_diagram, DeltaPosition, DotDiagram, DotRow};
use crate::flips::{
    bn1_reduction, flip_last, flip_last_by_diagram, flip_oracle_step, flip_sequence_with, full_configuration,
    FlipFormula, FlipOutcome, Mk1aData,
};
use crate::wahl::{bn1_kind, generate, is_class_w, wahl_chain, NeighborhoodKind};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

type Outcome = std::result::Result<(), String>;

fn hj(v: &[i64]) -> HjChain {
    HjChain::new(v.to_vec()).expect("literal chain")
}

fn gc(v: &[i64]) -> GeneralChain {
    GeneralChain::new(v.to_vec()).expect("literal chain")
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(got: T, want: T) -> Outcome {
    if got == want {
        Ok(())
    } else {
        Err(format!("got {got:?}, expected {want:?}"))
    }
}

fn flip_with(formula: &FlipFormula, chain: &[i64]) -> std::result::Result<crate::flips::FlipResult, String> {
    let data = Mk1aData::last(hj(chain)).map_err(|e| e.to_string())?;
    formula(&data).map_err(|e| e.to_string())
}

pub fn verify_paper() -> Vec<Check> {
    verify_paper_with(&flip_last)
}

type CheckFn<'a> = dyn Fn() -> Outcome + 'a;

/// Run every check, using `formula` wherever the closed-form flip is needed.
pub fn verify_paper_with(formula: &FlipFormula) -> Vec<Check> {
    let c4925 = hj(&[2, 2, 5, 4]);
    let checks: Vec<(&str, Box<CheckFn>)> = vec![
        (
            "expand 49/34",
            Box::new(|| expect_eq(expand(49, 34).map_err(|e| e.to_string())?, c4925.clone())),
        ),
        (
            "evaluate 2,2,5,4",
            Box::new(|| {
                expect_eq(
                    evaluate(&c4925.to_general()).map_err(|e| e.to_string())?,
                    Continuant { num: 49, den: 34 },
                )
            }),
        ),
        (
            "dual of 49/34",
            Box::new(|| expect_eq(c4925.dual().map_err(|e| e.to_string())?, hj(&[4, 2, 2, 3, 2, 2]))),
        ),
        (
            "zero chain of 49/34",
            Box::new(|| {
                let z = zero_chain(&c4925).map_err(|e| e.to_string())?;
                expect_eq(z.clone(), gc(&[2, 2, 5, 4, 1, 2, 2, 3, 2, 2, 4]))?;
                expect_eq(reduce_zero(&z).map_err(|e| e.to_string())?.is_zero(), true)
            }),
        ),
        (
            "dot diagram of 49/34",
            Box::new(|| {
                let d = DotDiagram::build(&c4925);
                let rows: Vec<DotRow> = [(1, 1), (1, 1), (1, 4), (4, 3)]
                    .iter()
                    .map(|&(start_col, len)| DotRow { start_col, len })
                    .collect();
                expect_eq((d.rows().to_vec(), d.n_cols(), d.n_dots()), (rows, 6, 9))?;
                expect_eq(dual_from_diagram(&d), hj(&[4, 2, 2, 3, 2, 2]))?;
                expect_eq(d.is_symmetric(), true)
            }),
        ),
        (
            "delta position of 49/34",
            Box::new(|| {
                expect_eq(
                    delta_position(&c4925).map_err(|e| e.to_string())?,
                    DeltaPosition { row: 3, col: 3 },
                )
            }),
        ),
        (
            "delta half of 49/34",
            Box::new(|| expect_eq(delta_half(&c4925).map_err(|e| e.to_string())?, hj(&[2, 2, 4]))),
        ),
        (
            "class W of 49/34 and [4]",
            Box::new(|| {
                expect_eq(is_class_w(&c4925).map_err(|e| e.to_string())?.pq(), (7, 5))?;
                expect_eq(is_class_w(&hj(&[4])).map_err(|e| e.to_string())?.pq(), (2, 1))?;
                expect_eq(wahl_chain(7, 5).map_err(|e| e.to_string())?, c4925.clone())?;
                expect_eq(wahl_chain(2, 1).map_err(|e| e.to_string())?, hj(&[4]))?;
                expect_eq(
                    generate(2).map_err(|e| e.to_string())?.into_iter().collect::<Vec<_>>(),
                    vec![hj(&[4])],
                )
            }),
        ),
        (
            "flip 49/34",
            Box::new(|| {
                let r = flip_with(formula, &[2, 2, 5, 4])?;
                expect_eq(r.outcome.chain().cloned(), Some(hj(&[2, 5, 3])))?;
                expect_eq(r.outcome.params(), Some((5, 3)))
            }),
        ),
        (
            "flip 2,5,3",
            Box::new(|| {
                let r = flip_with(formula, &[2, 5, 3])?;
                expect_eq(r.outcome.params(), Some((3, 1)))?;
                expect_eq(r.outcome.chain().cloned(), Some(hj(&[5, 2])))
            }),
        ),
        (
            "flip 5,2",
            Box::new(|| {
                let r = flip_with(formula, &[5, 2])?;
                expect_eq((r.outcome, r.c_plus_weight), (FlipOutcome::Smooth, 4))
            }),
        ),
        (
            "flip 49/34 by dot diagram",
            Box::new(|| {
                let data = Mk1aData::last(c4925.clone()).map_err(|e| e.to_string())?;
                let r = flip_last_by_diagram(&data).map_err(|e| e.to_string())?;
                expect_eq(r.outcome.chain().cloned(), Some(hj(&[2, 5, 3])))
            }),
        ),
        (
            "flip figure rows by blow-downs",
            Box::new(|| {
                let c0 = full_configuration(7, 5).map_err(|e| e.to_string())?;
                expect_eq(c0.weights().clone(), gc(&[2, 2, 5, 4, 1, 2, 2]))?;
                let mut rows = vec![c0.weights().clone()];
                let mut cfg = c0;
                for _ in 0..3 {
                    cfg = flip_oracle_step(&cfg).map_err(|e| e.to_string())?.after;
                    rows.push(cfg.weights().clone());
                }
                expect_eq(
                    rows,
                    vec![
                        gc(&[2, 2, 5, 4, 1, 2, 2]),
                        gc(&[2, 2, 5, 3, 1, 2]),
                        gc(&[2, 2, 5, 2, 1]),
                        gc(&[2, 2, 4]),
                    ],
                )
            }),
        ),
        (
            "flip sequence 49/34",
            Box::new(|| {
                let t = flip_sequence_with(7, 5, formula).map_err(|e| e.to_string())?;
                let params: Vec<_> = t.steps.iter().map(|s| s.new_wahl.params()).collect();
                expect_eq(params, vec![Some((5, 3)), Some((3, 1)), None])?;
                expect_eq(t.final_chain, hj(&[2, 2, 4]))
            }),
        ),
        (
            "B_{n,1} delta half is [n+1]",
            Box::new(|| {
                for n in 2..=50 {
                    let c = wahl_chain(n, 1).map_err(|e| e.to_string())?;
                    let mut want = vec![n + 2];
                    want.extend(std::iter::repeat_n(2, (n - 2) as usize));
                    expect_eq(c.clone(), hj(&want))?;
                    expect_eq(delta_half(&c).map_err(|e| e.to_string())?, hj(&[n + 1]))?;
                }
                Ok(())
            }),
        ),
        (
            "[n+2,1,2,...,2] = [4]",
            Box::new(|| {
                for n in [3, 4] {
                    let r = bn1_reduction(n).map_err(|e| e.to_string())?;
                    expect_eq(r.trace.final_chain, gc(&[4]))?;
                }
                Ok(())
            }),
        ),
        (
            "B_{n,1} parity",
            Box::new(|| {
                expect_eq(bn1_kind(3).map_err(|e| e.to_string())?.kind, NeighborhoodKind::Flipping)?;
                expect_eq(
                    bn1_kind(4).map_err(|e| e.to_string())?.kind,
                    NeighborhoodKind::Divisorial,
                )
            }),
        ),
    ];
    checks
        .into_iter()
        .map(|(name, f)| {
            let res = f();
            Check {
                name: name.to_string(),
                passed: res.is_ok(),
                detail: res.err().unwrap_or_default(),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wahl::WahlParams;

    #[test]
    fn all_checks_pass() {
        let report = verify_paper();
        for c in &report {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn perturbed_formula_fails_the_flip_check() {
        let bad = |d: &Mk1aData| {
            let mut r = flip_last(d)?;
            if let FlipOutcome::Wahl(w) = &r.outcome {
                let mut v = w.chain.entries().to_vec();
                *v.last_mut().unwrap() += 1;
                r.outcome = FlipOutcome::Wahl(WahlParams {
                    chain: HjChain::new(v)?,
                    ..w.clone()
                });
            }
            Ok(r)
        };
        let report = verify_paper_with(&bad);
        let first = report.iter().find(|c| !c.passed).unwrap();
        assert_eq!(first.name, "flip 49/34");
    }
}
