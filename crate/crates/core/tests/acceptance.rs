//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. All comparisons are exact.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use faulhaber_core::cli;
use faulhaber_core::faulhaber::BernoulliTable;
use faulhaber_core::{
    bernoulli, infer_odd_bernoulli, power_sum_direct, power_sum_poly_n, power_sum_tform,
    telescoping_check, verify_faulhaber, verify_pascal_identity, Polynomial, Rational, Var,
};

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

fn poly(coeffs: &[(i64, i64)], var: Var) -> Polynomial {
    Polynomial::from_coeffs(coeffs.iter().map(|&(n, d)| r(n, d)).collect(), var)
}

fn cli_call(args: &[&str]) -> (u8, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("faulhaber").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Check {
    ensure(elapsed < limit, || {
        format!("{what} took {elapsed:?}, limit {limit:?}")
    })
}

fn c1_bernoulli_table() -> Check {
    let expected = [
        (0, r(1, 1)),
        (1, r(-1, 2)),
        (2, r(1, 6)),
        (3, r(0, 1)),
        (4, r(-1, 30)),
        (5, r(0, 1)),
        (6, r(1, 42)),
    ];
    for (k, v) in expected {
        let got = bernoulli(k);
        ensure(got == v, || format!("B_{k} = {got}, expected {v}"))?;
    }
    let start = Instant::now();
    let mut table = BernoulliTable::new();
    table.extend_to(200);
    within(start.elapsed(), Duration::from_secs(10), "B_0..B_200")
}

fn c2_displayed_polynomials() -> Check {
    let s3 = power_sum_poly_n(3).map_err(|e| e.to_string())?;
    let want = poly(&[(0, 1), (0, 1), (1, 4), (1, 2), (1, 4)], Var::N);
    ensure(s3 == want, || format!("S_3 = {s3}"))?;

    let fifth = power_sum_tform(2).map_err(|e| e.to_string())?;
    let want = poly(&[(-1, 1), (4, 1)], Var::T).scale(&r(1, 3));
    ensure(fifth.p == want, || {
        format!("T-form of sum k^5: {}", fifth.p)
    })?;

    let seventh = power_sum_tform(3).map_err(|e| e.to_string())?;
    let want = poly(&[(0, 1), (0, 1), (8, 1)], Var::T)
        .sub(&poly(&[(-1, 1), (4, 1)], Var::T).scale(&r(4, 3)))
        .unwrap()
        .scale(&r(1, 4));
    ensure(seventh.p == want, || {
        format!("T-form of sum k^7: {}", seventh.p)
    })
}

fn c3_pascal_suite() -> Check {
    for m in 2..=6 {
        let rep = verify_pascal_identity(m).map_err(|e| e.to_string())?;
        ensure(rep.holds, || format!("displayed identity m={m} fails"))?;
    }
    let start = Instant::now();
    let (code, out, _) = cli_call(&["verify", "pascal", "--max", "50"]);
    let elapsed = start.elapsed();
    let passes = out.lines().filter(|l| l.starts_with("PASS ")).count();
    ensure(code == 0 && passes == 49, || {
        format!("exit {code}, {passes} PASS lines")
    })?;
    within(elapsed, Duration::from_secs(10), "verify pascal --max 50")
}

fn c4_telescoping() -> Check {
    for m in 1..=10 {
        for n in 1..=50 {
            let rep = telescoping_check(m, n).map_err(|e| e.to_string())?;
            ensure(rep.holds, || format!("m={m} N={n}"))?;
        }
    }
    let rep = telescoping_check(5, 3).map_err(|e| e.to_string())?;
    ensure(rep.lhs.coeff(0) == r(7776, 1), || {
        format!("N=3, m=5: {}", rep.lhs)
    })
}

fn c5_cross_representation() -> Check {
    let start = Instant::now();
    for m in 1..=40 {
        let rep = verify_faulhaber(m).map_err(|e| e.to_string())?;
        ensure(rep.holds, || format!("m={m}"))?;
    }
    within(
        start.elapsed(),
        Duration::from_secs(30),
        "verify_faulhaber 1..=40",
    )
}

fn c6_odd_bernoulli() -> Check {
    for m in 1..=40 {
        let b = infer_odd_bernoulli(m).map_err(|e| e.to_string())?;
        ensure(b.is_zero(), || format!("inferred B_{} = {b}", 2 * m + 1))?;
    }
    for m in 1..=100 {
        let b = bernoulli(2 * m + 1);
        ensure(b.is_zero(), || format!("B_{} = {b}", 2 * m + 1))?;
    }
    Ok(())
}

fn c7_oracle_equivalence() -> Check {
    for m in 1..=20usize {
        let s = power_sum_poly_n(m).map_err(|e| e.to_string())?;
        for n in 0..=200u64 {
            let closed = s.eval(&Rational::from_integer(n));
            let direct = Rational::from_integer(power_sum_direct(m as u32, n));
            ensure(closed == direct, || {
                format!("m={m} n={n}: {closed} vs {direct}")
            })?;
        }
    }
    Ok(())
}

fn c8_structural_invariants() -> Check {
    for m in 1..=40 {
        let form = std::panic::catch_unwind(|| power_sum_tform(m))
            .map_err(|_| format!("m={m}: invariant assertion fired"))?
            .map_err(|e| e.to_string())?;
        ensure(form.p.degree() == Some(m - 1), || format!("m={m}: degree"))?;
        let lead = Rational::from_integer(num_bigint::BigInt::from(2).pow(m as u32))
            .checked_div(&Rational::from_integer(m as u64 + 1))
            .unwrap();
        ensure(form.p.leading_coeff() == Some(&lead), || {
            format!("m={m}: leading")
        })?;
        if m >= 2 {
            let (c0, c1) = (form.p.coeff(0), form.p.coeff(1));
            ensure(c1 == -(&c0 * &r(4, 1)), || {
                format!("m={m}: c1={c1} c0={c0}")
            })?;
        }
    }
    Ok(())
}

fn c9_cli_golden() -> Check {
    let (code, out, err) = cli_call(&["bernoulli", "5"]);
    ensure(code == 0 && err.is_empty(), || {
        format!("bernoulli 5: exit {code}")
    })?;
    ensure(
        out == "0\t1\n1\t-1/2\n2\t1/6\n3\t0\n4\t-1/30\n5\t0\n",
        || format!("bernoulli 5: {out:?}"),
    )?;

    let (code, out, _) = cli_call(&["powersum", "3", "--basis", "n"]);
    ensure(code == 0 && out == "1/4*n^4 + 1/2*n^3 + 1/4*n^2\n", || {
        format!("powersum 3: exit {code}, {out:?}")
    })?;

    let (code, out, _) = cli_call(&["eval", "7", "2"]);
    ensure(
        code == 0 && out == "formula\t129\ndirect\t129\nagree\ttrue\n",
        || format!("eval 7 2: exit {code}, {out:?}"),
    )?;

    let (code, out, _) = cli_call(&["verify", "odd-bernoulli", "--max", "40"]);
    let mut want = String::new();
    for m in 1..=40 {
        want.push_str(&format!("PASS odd-bernoulli m={m}: B_{} = 0\n", 2 * m + 1));
    }
    want.push_str("odd-bernoulli: 40/40 passed\n");
    ensure(code == 0 && out == want, || {
        format!("verify odd-bernoulli: exit {code}")
    })?;

    let (code, out, err) = cli_call(&["bernoulli", "five"]);
    ensure(code == 2 && out.is_empty() && !err.is_empty(), || {
        format!("malformed: exit {code}")
    })
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 Bernoulli table", c1_bernoulli_table),
        ("2 displayed polynomials", c2_displayed_polynomials),
        ("3 Pascal identity suite", c3_pascal_suite),
        ("4 telescoping suite", c4_telescoping),
        ("5 cross-representation", c5_cross_representation),
        ("6 odd Bernoulli vanishing", c6_odd_bernoulli),
        ("7 oracle equivalence", c7_oracle_equivalence),
        (
            "8 structural Faulhaber invariants",
            c8_structural_invariants,
        ),
        ("9 CLI golden output", c9_cli_golden),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        match check() {
            Ok(()) => println!("PASS criterion {name} ({:.2?})", start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    println!(
        "acceptance: {}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
