use hyperbolic_clifford::cli::{eval, parse, Ast, Func};
use hyperbolic_clifford::fields::Expr;
use proptest::prelude::*;

const N: usize = 3;

fn corpus() -> Vec<&'static str> {
    include_str!("data/expressions.txt").lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()).collect()
}

#[test]
fn corpus_round_trips_and_evaluates() {
    let lines = corpus();
    assert!(lines.len() >= 50);
    for line in lines {
        let ast = parse(line, N).unwrap_or_else(|e| panic!("{line:?}: {e}"));
        let printed = ast.to_string();
        assert_eq!(parse(&printed, N).unwrap(), ast, "{line:?} printed as {printed:?}");
        let (a, b) = (eval(&ast, N).unwrap(), eval(&parse(&printed, N).unwrap(), N).unwrap());
        assert_eq!(a, b, "{line:?}");
    }
}

#[test]
fn precedence_binds_wedge_tightest() {
    assert_eq!(parse("e1 + e2 ^ e3 * t1", N).unwrap().to_string(), "(e1 + ((e2 ^ e3) * t1))");
    assert_eq!(parse("e1 _| e2 ^ e3", N).unwrap().to_string(), "(e1 _| (e2 ^ e3))");
    assert_eq!(parse("e1 - e2 - e3", N).unwrap().to_string(), "((e1 - e2) - e3)");
}

fn leaf() -> impl Strategy<Value = Ast> {
    prop_oneof![
        (-1000i32..1000, 0u32..4).prop_map(|(m, e)| Ast::Scalar(m as f64 / 10f64.powi(e as i32))),
        (1..=N).prop_map(Ast::BasisE),
        (1..=N).prop_map(Ast::BasisT),
        Just(Ast::Call(Func::Sigma, vec![])),
    ]
}

fn ast() -> impl Strategy<Value = Ast> {
    leaf().prop_recursive(5, 48, 2, |inner| {
        let pair = (inner.clone(), inner.clone());
        let unary = prop_oneof![
            Just(Func::Rev),
            Just(Func::Gi),
            Just(Func::Conj),
            Just(Func::Hconj),
            Just(Func::Hodge),
            Just(Func::Unhodge)
        ];
        prop_oneof![
            inner.clone().prop_map(|a| Ast::Neg(Box::new(a))),
            pair.clone().prop_map(|(a, b)| Ast::Add(Box::new(a), Box::new(b))),
            pair.clone().prop_map(|(a, b)| Ast::Sub(Box::new(a), Box::new(b))),
            pair.clone().prop_map(|(a, b)| Ast::Wedge(Box::new(a), Box::new(b))),
            pair.clone().prop_map(|(a, b)| Ast::LContr(Box::new(a), Box::new(b))),
            pair.clone().prop_map(|(a, b)| Ast::RContr(Box::new(a), Box::new(b))),
            pair.clone().prop_map(|(a, b)| Ast::Clifford(Box::new(a), Box::new(b))),
            pair.prop_map(|(a, b)| Ast::Call(Func::Sp, vec![a, b])),
            (inner.clone(), 0..=2 * N).prop_map(|(a, k)| Ast::Call(Func::Part, vec![a, Ast::Scalar(k as f64)])),
            (unary, inner).prop_map(|(f, a)| Ast::Call(f, vec![a])),
        ]
    })
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![(-50i32..50).prop_map(|k| Expr::constant(k as f64 / 4.0)), (0..N).prop_map(Expr::coord)];
    leaf.prop_recursive(4, 32, 2, |inner| {
        let pair = (inner.clone(), inner.clone());
        prop_oneof![
            pair.clone().prop_map(|(a, b)| Expr::sum(&a, &b)),
            pair.clone().prop_map(|(a, b)| Expr::difference(&a, &b)),
            pair.prop_map(|(a, b)| Expr::product(&a, &b)),
            inner.clone().prop_map(|a| a.sin()),
            inner.clone().prop_map(|a| a.cos()),
            (inner, 0i32..4).prop_map(|(a, k)| a.powi(k)),
        ]
    })
}

proptest! {
    #[test]
    fn ast_display_reparses_to_the_same_tree(a in ast()) {
        let printed = a.to_string();
        prop_assert_eq!(parse(&printed, N).unwrap(), a);
    }

    #[test]
    fn expr_display_reparses_to_the_same_values(e in expr(), p in prop::array::uniform3(-2.0f64..2.0)) {
        let printed = e.to_string();
        let back = Expr::parse(&printed, N).unwrap();
        let (x, y) = (e.eval(&p), back.eval(&p));
        prop_assert!((x - y).abs() <= 1e-12 * (1.0 + x.abs()), "{} vs {}", x, y);
    }
}
