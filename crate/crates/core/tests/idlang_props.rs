use fibluc_core::idlang::{parse, parse_expr, Expr, Identity, IndexExpr};
use fibluc_core::SeqKind;
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{RngAlgorithm, TestRng};

fn index_expr() -> impl Strategy<Value = IndexExpr> {
    let leaf = prop_oneof![
        (0i64..20).prop_map(IndexExpr::Int),
        prop_oneof![Just("n"), Just("k")].prop_map(|v| IndexExpr::Var(v.into())),
    ];
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|a| IndexExpr::Neg(Box::new(a))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| IndexExpr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| IndexExpr::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner).prop_map(|(a, b)| IndexExpr::Mul(Box::new(a), Box::new(b))),
        ]
    })
}

fn kind() -> impl Strategy<Value = SeqKind> {
    prop_oneof![Just(SeqKind::Fib), Just(SeqKind::Luc)]
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0u64..1000).prop_map(|v| Expr::Int(BigInt::from(v))),
        Just(Expr::X),
        Just(Expr::Y),
        Just(Expr::Delta),
        prop_oneof![Just("n"), Just("k")].prop_map(|v| Expr::Var(v.into())),
        (index_expr(), index_expr()).prop_map(|(a, b)| Expr::Binom(a, b)),
        (kind(), index_expr()).prop_map(|(kind, index)| Expr::Seq { kind, index, args: None }),
    ];
    leaf.prop_recursive(4, 32, 3, |inner| {
        let b = |e: Expr| Box::new(e);
        prop_oneof![
            inner.clone().prop_map(move |a| Expr::Neg(b(a))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Add(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Sub(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Mul(b(x), b(y))),
            (inner.clone(), index_expr()).prop_map(move |(x, e)| Expr::Pow(b(x), e)),
            (prop_oneof![Just("n"), Just("k")], index_expr(), index_expr(), inner.clone()).prop_map(
                move |(var, low, high, body)| Expr::Sum { var: var.into(), low, high, body: b(body) }
            ),
            (kind(), index_expr(), inner.clone(), inner).prop_map(|(kind, index, xa, ya)| Expr::Seq {
                kind,
                index,
                args: Some(Box::new((xa, ya))),
            }),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn render_parse_round_trip(lhs in expr(), rhs in expr()) {
        let id = Identity { lhs, rhs };
        let text = id.to_string();
        let back = parse(&text).map_err(|e| TestCaseError::fail(format!("{text}: {e}")))?;
        prop_assert_eq!(&back, &id);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn arbitrary_text_never_panics(s in "\\PC{0,64}") {
        let _ = parse(&s);
        let _ = parse_expr(&s);
    }
}

const TOKENS: &[&str] = &[
    "x", "y", "D", "n", "k", "r", "F", "L", "binom", "sum", "0", "1", "2", "17",
    "99999999999999999999", "+", "-", "*", "^", "(", ")", "[", "]", ",", "=", "..", ".", " ",
    "\n", "$", "é",
];

#[test]
fn fuzz_token_streams() {
    let mut rng = TestRng::deterministic_rng(RngAlgorithm::ChaCha);
    let mut accepted = 0;
    for _ in 0..20_000 {
        let len = rng.random_range(0..24);
        let text: String = (0..len).map(|_| TOKENS[rng.random_range(0..TOKENS.len())]).collect();
        match parse(&text) {
            Ok(id) => {
                accepted += 1;
                let rendered = id.to_string();
                assert_eq!(parse(&rendered).unwrap(), id, "{text:?} -> {rendered:?}");
            }
            Err(e) => assert!(e.line >= 1 && e.column >= 1),
        }
        let _ = parse_expr(&text);
    }
    assert!(accepted > 0);
}
