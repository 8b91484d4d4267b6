use std::time::Instant;

use fibluc_core::identities::{build_catalog, check_case, find_case, run_catalog, Arity, IdentityCase, Value};
use fibluc_core::report::{NoClock, Status};
use fibluc_core::{fib, luc, BivarPoly, Rat, Ring, RingValue};

fn x() -> BivarPoly {
    BivarPoly::x()
}
fn y() -> BivarPoly {
    BivarPoly::y()
}
fn f(n: u32) -> BivarPoly {
    fib(n, &x(), &y())
}
fn l(n: u32) -> BivarPoly {
    luc(n, &x(), &y())
}
fn sign(e: u32) -> BivarPoly {
    BivarPoly::sign_pow(e)
}
fn y_pow(e: u32) -> BivarPoly {
    y().pow(e)
}

#[test]
fn full_grid_passes() {
    let start = Instant::now();
    let report = run_catalog(10, 6, None, &NoClock).unwrap();
    let elapsed = start.elapsed();
    for r in report.failures() {
        eprintln!("{} {} {:?} {:?}", r.id, r.indices(), r.lhs, r.rhs);
    }
    assert!(report.all_passed());
    let ids: std::collections::BTreeSet<_> = report.records.iter().map(|r| r.id.clone()).collect();
    assert_eq!(ids.len(), 31);
    eprintln!("catalog: {} cells in {:?}", report.records.len(), elapsed);
}

#[test]
fn grid_cell_counts() {
    let report = run_catalog(10, 6, None, &NoClock).unwrap();
    let cat = build_catalog();
    let expected: usize = cat
        .iter()
        .map(|c| match c.arity {
            Arity::Nullary => 1,
            Arity::N => (10 - c.n_min + 1) as usize,
            Arity::NK => ((10 - c.n_min + 1) * (6 - c.k_min + 1)) as usize,
        })
        .sum();
    assert_eq!(report.records.len(), expected);
    let mut sorted = report.records.clone();
    sorted.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    assert_eq!(sorted, report.records);
}

#[test]
fn integral_where_expected() {
    // Every base-ring side of the index-free and unary cases has integer coefficients.
    for case in build_catalog() {
        for (n, k) in case.cells(4, 3) {
            let v = (case.rhs)(n.unwrap_or(0), k.unwrap_or(0));
            assert!(integral(&v), "{} at {:?},{:?}", case.id, n, k);
        }
    }
}

fn integral(v: &Value) -> bool {
    match v {
        Value::Scalar(r) => {
            let (a, b) = r.parts();
            a.is_integral() && b.is_integral()
        }
        Value::Matrix(m) => [&m.e11, &m.e12, &m.e21, &m.e22].iter().all(|e| {
            let (a, b) = e.parts();
            a.is_integral() && b.is_integral()
        }),
        Value::Tuple(items) => items.iter().all(integral),
    }
}

fn with_rhs(id: &str, rhs: impl Fn(u32, u32) -> Value + Send + Sync + 'static) -> IdentityCase {
    let mut c = find_case(id).unwrap();
    c.rhs = Box::new(rhs);
    c
}

fn fails_somewhere(case: &IdentityCase) -> bool {
    case.cells(10, 6)
        .into_iter()
        .any(|(n, k)| !check_case(case, n.unwrap_or(0), k.unwrap_or(0)).unwrap().passed)
}

#[test]
fn single_sign_flips_are_detected() {
    let disc = BivarPoly::discriminant();
    let d = disc.clone();
    // EQ11: (x²+4y)F_n² -> -(x²+4y)F_n²
    assert!(fails_somewhere(&with_rhs("EQ11", move |n, _| (-(&d * &f(n).square())).into())));
    // EQ15: (-1)^n -> (-1)^{n+1}
    let d = disc.clone();
    assert!(fails_somewhere(&with_rhs("EQ15", move |n, _| {
        (&(&sign(n + 1) * &y_pow(n)) * &d).into()
    })));
    // EQ17 rhs: L_{2n} -> -L_{2n}
    assert!(fails_somewhere(&with_rhs("EQ17", |n, _| (-l(2 * n)).into())));
    // EQ21: F_k L_{nk} -> -F_k L_{nk}
    assert!(fails_somewhere(&with_rhs("EQ21", |n, k| (-(&f(k) * &l(n * k))).into())));
    // EQ30: y^{2nk} L_k² -> (-y)^{... } sign flip on y: (-1)^{2nk+1}
    assert!(fails_somewhere(&with_rhs("EQ30", |n, k| {
        (&(&sign(2 * n * k + 1) * &y_pow(2 * n * k)) * &l(k).square()).into()
    })));
    // EQ31 in the uncorrected form fails for odd k.
    assert!(fails_somewhere(&with_rhs("EQ31", |n, k| {
        (&(-y_pow(k * (2 * n - 1))) * &l(k).square()).into()
    })));
}

#[test]
fn corrupted_eq11_reports_both_sides() {
    let mut c = find_case("EQ11").unwrap();
    c.lhs = Box::new(|n, _| (&l(n).square() + &(&(&sign(n) * &BivarPoly::int(4)) * &y_pow(n))).into());
    let report = fibluc_core::identities::run_cases(&[&c], 10, 6, &NoClock).unwrap();
    let bad = report.first_failure().unwrap();
    assert_eq!(bad.status, Status::Fail);
    assert!(bad.lhs.is_some() && bad.rhs.is_some());
}

#[test]
fn homogeneity() {
    let two = Rat::from_integer(2.into());
    let sx = BivarPoly::x().scale(&two);
    let sy = BivarPoly::y().scale(&(&two * &two));
    for n in 1..=10u32 {
        let fs = f(n).substitute(&sx, &sy);
        assert_eq!(fs, f(n).scale(&two.pow(n as i32 - 1)), "F_{n}");
        let ls = l(n).substitute(&sx, &sy);
        assert_eq!(ls, l(n).scale(&two.pow(n as i32)), "L_{n}");
    }
}

#[test]
fn eq24_delta_part_vanishes() {
    let c = find_case("EQ24").unwrap();
    for (n, k) in c.cells(5, 4) {
        match (c.lhs)(n.unwrap(), k.unwrap()) {
            Value::Scalar(v) => assert!(v.is_base(), "{v}"),
            _ => unreachable!(),
        }
    }
    let _ = RingValue::delta();
}
