//! Specification and word syntax: printing and parsing are inverse, and
//! whitespace is insignificant.

use proptest::prelude::*;

use gkcut::dsl::{eval_word, parse_spec, parse_word, AstKind, Span, SpecAst};
use gkcut::lab::word;
use gkcut::{construct, Bounds, Error, GroupSpec, SdAction};

fn node(kind: AstKind) -> SpecAst {
    SpecAst {
        kind,
        span: Span { line: 0, column: 0 },
    }
}

fn atom() -> impl Strategy<Value = SpecAst> {
    prop_oneof![
        (
            prop::sample::select(vec!["Cyc", "Dih", "Quat", "Sym", "Alt"]),
            0u64..1000
        )
            .prop_map(|(n, k)| node(AstKind::Atom {
                name: n.into(),
                params: vec![k]
            })),
        (0u64..50, 0u64..10).prop_map(|(p, k)| node(AstKind::Atom {
            name: "EA".into(),
            params: vec![p, k]
        })),
        Just(node(AstKind::Atom {
            name: "MM".into(),
            params: vec![]
        })),
        Just(node(AstKind::Atom {
            name: "W4200".into(),
            params: vec![]
        })),
    ]
}

fn action() -> impl Strategy<Value = SdAction> {
    prop_oneof![
        (0u64..100).prop_map(SdAction::Pow),
        prop::collection::vec(
            prop::collection::vec(prop::collection::vec(-9i64..20, 1..4), 1..4),
            1..3
        )
        .prop_map(SdAction::Mats),
    ]
}

/// Syntactically well-formed trees; semantics are not checked.
fn ast() -> impl Strategy<Value = SpecAst> {
    atom().prop_recursive(4, 24, 3, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| node(AstKind::DP(Box::new(a), Box::new(b)))),
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| node(AstKind::Wr(Box::new(a), Box::new(b)))),
            (inner.clone(), inner, action()).prop_map(|(a, b, x)| node(AstKind::SD(
                Box::new(a),
                Box::new(b),
                x
            ))),
        ]
    })
}

/// Inserts spaces, tabs or newlines after punctuation.
fn spread(text: &str, seeds: &[u8]) -> String {
    let mut out = String::new();
    for (i, c) in text.chars().enumerate() {
        out.push(c);
        if matches!(c, '(' | ',' | ')' | '=' | '[' | ']') {
            out.push_str(match seeds[i % seeds.len()] % 4 {
                0 => "",
                1 => " ",
                2 => "\n  ",
                _ => "\t",
            });
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn print_then_parse_is_identity(t in ast(), seeds in prop::collection::vec(any::<u8>(), 1..16)) {
        let text = t.to_string();
        let back = parse_spec(&text).unwrap();
        prop_assert_eq!(back.strip_spans(), t.clone());
        prop_assert_eq!(back.to_string(), text.clone());
        let spaced = spread(&text, &seeds);
        prop_assert_eq!(parse_spec(&spaced).unwrap().strip_spans(), t);
    }

    #[test]
    fn lowering_agrees_with_validation(t in ast()) {
        let text = t.to_string();
        match text.parse::<GroupSpec>() {
            Ok(spec) => {
                prop_assert!(spec.validate().is_ok());
                prop_assert_eq!(spec.to_string().parse::<GroupSpec>().unwrap(), spec);
            }
            Err(e) => prop_assert_eq!(e.kind(), "SemanticError"),
        }
    }

    #[test]
    fn truncations_are_syntax_errors(t in ast(), cut in any::<prop::sample::Index>()) {
        let text = t.to_string();
        let n = cut.index(text.len());
        prop_assume!(n > 0 && text.is_char_boundary(n));
        let short = &text[..n];
        prop_assume!(!short.ends_with(')') || short.matches('(').count() != short.matches(')').count());
        prop_assume!(parse_spec(short).is_err());
        match parse_spec(short).unwrap_err() {
            Error::Syntax { line, column, .. } => {
                prop_assert_eq!(line, 1);
                // end of input is reported two columns past the last character
                prop_assert!(column >= 1 && column <= n + 2);
            }
            e => prop_assert!(false, "{:?}", e),
        }
    }

    #[test]
    fn element_words_evaluate_back(gi in 0usize..4, i in any::<prop::sample::Index>()) {
        let spec = ["MM", "Sym(5)", "W4200", "Wr(Cyc(3),Sym(3))"][gi];
        let g = construct(&spec.parse().unwrap(), &Bounds::default()).unwrap();
        let x = i.index(g.order());
        let w = word(&g, x);
        prop_assert_eq!(eval_word(&g, &w).unwrap(), x);
        let factors = parse_word(&w).unwrap();
        prop_assert!(factors.iter().all(|&(k, e)| k < g.generators().len() && e >= 1));
    }
}

#[test]
fn documented_examples() {
    let w = "DP(MM, SD(Cyc(7),Cyc(3),pow=2))"
        .parse::<GroupSpec>()
        .unwrap();
    let g = construct(&w, &Bounds::default()).unwrap();
    let named = construct(&GroupSpec::W4200, &Bounds::default()).unwrap();
    assert_eq!(g.order(), named.order());
    assert_eq!(g.classes().len(), named.classes().len());
    assert!(matches!(
        parse_spec("Sym(9)").unwrap().kind,
        AstKind::Atom { .. }
    ));
    let e = parse_spec("DP(MM").unwrap_err();
    assert!(
        matches!(
            e,
            Error::Syntax {
                line: 1,
                column: 7,
                ..
            }
        ),
        "{e}"
    );
}

#[test]
fn inverse_words() {
    let g = construct(&GroupSpec::Sym(4), &Bounds::default()).unwrap();
    let a = eval_word(&g, "g0*g1^-1").unwrap();
    let b = eval_word(&g, "g1*g0^-1").unwrap();
    assert_eq!(g.inv(a), b);
    assert_eq!(eval_word(&g, "e").unwrap(), g.identity());
    assert_eq!(eval_word(&g, "g1^4").unwrap(), g.identity());
    assert!(eval_word(&g, "g2").is_err());
}
