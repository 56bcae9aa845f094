//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each, and
//! exits nonzero if any criterion fails. All comparisons are exact.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use triads_core::catalog::{self, standard_entries, RootSequence};
use triads_core::duality::verify_triad;
use triads_core::matrix::matrix_power_entry;
use triads_core::path_oracle::{count_paths, oracle_triangle};
use triads_core::polynomials::{eigen_residual, triad_polynomials};
use triads_core::triangle::triangle;
use triads_core::{ExactScalar, Polynomial, Row, SequenceSpec, TriadError, TriadSpec};

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

fn ints(v: &[i64]) -> Row {
    v.iter().map(|&x| ExactScalar::from(x)).collect()
}

fn entry(name: &str) -> TriadSpec {
    catalog::builtin(name).expect("catalog name").triad
}

fn check_rows(name: &str, printed: &[&[i64]]) -> Outcome {
    let tri = triangle(&entry(name), printed.len() - 1).map_err(|e| e.to_string())?;
    for (n, expected) in printed.iter().enumerate() {
        ensure!(
            tri.rows[n] == ints(expected),
            "{name} row {n}: got {:?}, printed {:?}",
            tri.rows[n],
            expected
        );
    }
    Ok(())
}

/// Rows 0-5 (0-4 for Tchebychev) of the published triangles.
fn ac1_printed_triangles() -> Outcome {
    check_rows(
        "stirling2",
        &[&[1], &[0, 1], &[0, 1, 1], &[0, 1, 3, 1], &[0, 1, 7, 6, 1], &[0, 1, 15, 25, 10, 1]],
    )?;
    check_rows(
        "stirling2_signed",
        &[
            &[1],
            &[0, 1],
            &[0, -1, 1],
            &[0, 1, -3, 1],
            &[0, -1, 7, -6, 1],
            &[0, 1, -15, 25, -10, 1],
        ],
    )?;
    check_rows(
        "newton_gregory",
        &[
            &[1],
            &[0, 1],
            &[0, 1, 2],
            &[0, 1, 6, 6],
            &[0, 1, 14, 36, 24],
            &[0, 1, 30, 150, 240, 120],
        ],
    )?;
    check_rows(
        "hermite",
        &[&[1], &[0, 1], &[1, 0, 1], &[0, 3, 0, 1], &[3, 0, 6, 0, 1], &[0, 15, 0, 10, 0, 1]],
    )?;
    check_rows(
        "tchebychev",
        &[&[1], &[0, 1], &[1, 0, 1], &[0, 2, 0, 1], &[2, 0, 3, 0, 1]],
    )
}

fn ac2_duality_all_catalog() -> Outcome {
    let entries = standard_entries();
    ensure!(entries.len() == 9, "expected nine catalog triads");
    for e in entries {
        let report = verify_triad(&e.triad, 20).map_err(|err| format!("{}: {err}", e.name))?;
        ensure!(
            report.all_match() && report.row_matches.len() == 21,
            "{}: first mismatch {:?}",
            e.name,
            report.first_mismatch
        );
    }
    Ok(())
}

fn ac3_oracle_triangulation() -> Outcome {
    for e in standard_entries() {
        let t = &e.triad;
        let engine = triangle(t, 10).map_err(|err| err.to_string())?;
        let oracle = oracle_triangle(t, 10).map_err(|err| err.to_string())?;
        ensure!(engine.rows == oracle.rows, "{}: triangle differs from path oracle", e.name);
        for n in 0..=8 {
            for k in 0..=6 {
                for l in 0..=6 {
                    let m = matrix_power_entry(t, n, k, l).map_err(|err| err.to_string())?;
                    let p = count_paths(t, n, k, l).map_err(|err| err.to_string())?;
                    ensure!(m == p, "{} n={n} k={k} l={l}: matrix {m} vs paths {p}", e.name);
                }
            }
        }
    }
    Ok(())
}

fn ac4_closed_forms() -> Outcome {
    for e in standard_entries() {
        let tri = triangle(&e.triad, 15).map_err(|err| err.to_string())?;
        for n in 0..=15 {
            for k in 0..=n {
                let c = e.closed_form(n, k).map_err(|err| err.to_string())?;
                ensure!(c == tri.rows[n][k], "{} ({n},{k}): closed form {c} vs {}", e.name, tri.rows[n][k]);
            }
        }
    }
    // Hermite parity zeros and Tchebychev ballot numbers, spelled out.
    let hermite = triangle(&entry("hermite"), 15).map_err(|err| err.to_string())?;
    let tcheb = triangle(&entry("tchebychev"), 15).map_err(|err| err.to_string())?;
    for n in 0..=15usize {
        for k in 0..=n {
            let odd = (n - k) % 2 == 1;
            ensure!(hermite.rows[n][k].is_zero() == odd, "hermite parity at ({n},{k})");
            let ballot = if odd {
                0
            } else {
                let m = (n - k) / 2;
                let choose = |a: usize, b: usize| -> i64 {
                    (0..b).fold(1i64, |acc, j| acc * (a - j) as i64 / (j + 1) as i64)
                };
                choose(n, m) - if m == 0 { 0 } else { choose(n, m - 1) }
            };
            ensure!(tcheb.rows[n][k] == ExactScalar::from(ballot), "ballot number at ({n},{k})");
        }
    }
    Ok(())
}

/// The Lah recurrence exactly as written, iterated on its own.
fn lah_by_printed_recurrence(max_row: usize) -> Vec<Row> {
    let mut rows = vec![ints(&[1])];
    for n in 0..max_row {
        let prev = &rows[n];
        let at = |k: usize| prev.get(k).cloned().unwrap_or_default();
        let next = (0..=n + 1)
            .map(|k| {
                let left = if k >= 1 { at(k - 1) } else { ExactScalar::zero() };
                let kk = ExactScalar::from(k);
                left + ExactScalar::from(2 * k) * at(k) + &kk * (&kk + ExactScalar::one()) * at(k + 1)
            })
            .collect();
        rows.push(next);
    }
    rows
}

fn ac5_lah_consistency() -> Outcome {
    let printed = lah_by_printed_recurrence(12);
    let falling = RootSequence(SequenceSpec::linear(-1, 1));
    let rising = RootSequence(SequenceSpec::linear(1, -1));
    let generalized = catalog::generalized_lah(&falling, &rising, 12).map_err(|e| e.to_string())?;
    let lah_triad = triangle(&entry("lah"), 12).map_err(|e| e.to_string())?;
    for n in 0..=12 {
        for k in 0..=n {
            let closed = catalog::closed_form("lah", n, k).map_err(|e| e.to_string())?;
            ensure!(printed[n][k] == closed, "recurrence vs closed form at ({n},{k})");
            ensure!(generalized[n][k] == closed, "generalized Lah vs closed form at ({n},{k})");
            ensure!(lah_triad.rows[n][k] == closed, "lah triad vs closed form at ({n},{k})");
        }
    }
    ensure!(lah_triad.rows[4] == ints(&[0, 24, 36, 12, 1]), "lah row 4 is {:?}", lah_triad.rows[4]);
    ensure!(lah_triad.rows[4] != ints(&[0, 10, 34, 12, 1]), "misprinted lah row 4 reproduced");
    let laguerre = triangle(&entry("laguerre"), 4).map_err(|e| e.to_string())?;
    ensure!(laguerre.rows[4] == ints(&[0, -24, 36, -12, 1]), "laguerre row 4 is {:?}", laguerre.rows[4]);
    ensure!(laguerre.rows[4] != ints(&[0, 8, 32, -12, 1]), "misprinted laguerre row 4 reproduced");
    Ok(())
}

fn ac6_structural() -> Outcome {
    for e in standard_entries() {
        let t = &e.triad;
        let polys = triad_polynomials(t, 20).map_err(|err| err.to_string())?;
        let tri = triangle(t, 20).map_err(|err| err.to_string())?;
        for (n, p) in polys.iter().enumerate() {
            ensure!(p.degree() == Some(n), "{}: deg P_{n} = {:?}", e.name, p.degree());
            let lead = p.leading_coefficient().expect("nonzero");
            ensure!((lead * &tri.rows[n][n]).is_one(), "{}: lead * c[{n}][{n}] != 1", e.name);
        }
        let residual = eigen_residual(t, &polys).map_err(|err| err.to_string())?;
        ensure!(
            residual.len() == 20 && residual.iter().all(Polynomial::is_zero),
            "{}: nonzero eigen residual",
            e.name
        );

        // Same triad with d_0 replaced by an arbitrary value.
        let mut d_values: Row = (0..=21).map(|k| t.d(k).expect("polynomial weight")).collect();
        d_values[0] = ExactScalar::from(99);
        let altered = TriadSpec::new(
            t.i_spec().clone(),
            t.q_spec().clone(),
            SequenceSpec::explicit(d_values),
        );
        let altered_tri = triangle(&altered, 20).map_err(|err| err.to_string())?;
        ensure!(altered_tri.rows == tri.rows, "{}: d_0 changed the triangle", e.name);
        let altered_polys = triad_polynomials(&altered, 20).map_err(|err| err.to_string())?;
        ensure!(altered_polys == polys, "{}: d_0 changed the polynomials", e.name);
    }
    Ok(())
}

fn ac7_negative() -> Outcome {
    // A zero up-weight at position z blocks every degree past z and nothing before.
    for z in 0..6usize {
        let ups: Row = (0..10).map(|k| ExactScalar::from(if k == z { 0 } else { k as i64 + 1 })).collect();
        let t = TriadSpec::new(
            SequenceSpec::explicit(ups),
            SequenceSpec::linear(0, 1),
            SequenceSpec::constant(1),
        );
        for m in 0..10 {
            let got = triad_polynomials(&t, m);
            if m > z {
                ensure!(got == Err(TriadError::NoPolynomialSequence(z)), "z={z} m={m}: {got:?}");
            } else {
                ensure!(got.is_ok(), "z={z} m={m}: unexpected {got:?}");
            }
        }
    }
    for e in standard_entries() {
        ensure!(triad_polynomials(&e.triad, 20).is_ok(), "{} has nonzero up-weights", e.name);
    }

    // Eulerian numbers come only from the separate time-dependent recurrence.
    let euler = catalog::euler_numbers(3);
    let expected = [ints(&[1]), ints(&[1, 0]), ints(&[1, 1, 0]), ints(&[1, 4, 1, 0])];
    ensure!(euler == expected, "eulerian rows {euler:?}");
    let (_, w1) = catalog::eulerian_step_weights(1, 1);
    let (_, w2) = catalog::eulerian_step_weights(2, 1);
    ensure!(w1 != w2, "eulerian weights should depend on the time step");
    // Row 1 = [1, 0] forces q_0 = 1 and i_0 = 0, and then c[2][1] = 0 for
    // every choice of the remaining weights, whereas E[2][1] = 1.
    for (q1, d2, i1) in [(0, 0, 0), (3, -2, 5), (-1, 7, 1)] {
        let forced = TriadSpec::new(
            SequenceSpec::explicit(ints(&[0, i1])),
            SequenceSpec::explicit(ints(&[1, q1, 0])),
            SequenceSpec::explicit(ints(&[0, 0, d2])),
        );
        let tri = triangle(&forced, 2).map_err(|e| e.to_string())?;
        ensure!(tri.rows[1] == euler[1], "row 1 should match");
        ensure!(tri.rows[2][1] != euler[2][1], "a triad reproduced eulerian row 2");
    }
    Ok(())
}

/// id, title, check, time budget
type Criterion = (&'static str, &'static str, fn() -> Outcome, Duration);

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("AC1", "printed triangles reproduced", ac1_printed_triangles, Duration::from_secs(1)),
        ("AC2", "duality identity, nine triads, N = 20", ac2_duality_all_catalog, Duration::from_secs(5)),
        ("AC3", "path oracle triangulation", ac3_oracle_triangulation, Duration::from_secs(30)),
        ("AC4", "closed forms, n <= 15", ac4_closed_forms, Duration::MAX),
        ("AC5", "Lah numbers by three routes", ac5_lah_consistency, Duration::MAX),
        ("AC6", "structural invariants", ac6_structural, Duration::MAX),
        ("AC7", "negative cases", ac7_negative, Duration::MAX),
    ];
    let mut failed = 0;
    for (id, title, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            if elapsed > budget {
                Err(format!("took {elapsed:?}, budget {budget:?}"))
            } else {
                Ok(())
            }
        });
        match outcome {
            Ok(()) => println!("[PASS] {id} {title} ({} ms)", elapsed.as_millis()),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {id} {title} ({} ms): {why}", elapsed.as_millis());
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
