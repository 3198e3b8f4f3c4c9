use super::*;
use crate::neutro::ThresholdMode;

const COGNITIVE: &str = r#"
# two experts
kind cognitive
policy k=1 mode=real
scenario "start"

[component "first"]
nodes C3 C1 C2
order C1 C2 C3
C1 -> C2
C2 -> C3 : -1
C3 -> C1 : I
on "start" C1

[component "second"]
nodes E1 E2
E1 -> E2 : 2+I
on "start" E2
"#;

fn errors(text: &str) -> Vec<Diagnostic> {
    parse(text).expect_err("should be rejected").0
}

fn first_error(text: &str) -> (usize, usize, String) {
    let d = errors(text).remove(0);
    (d.line, d.column, d.message)
}

#[test]
fn parses_cognitive_document() {
    let doc = parse(COGNITIVE).unwrap();
    assert_eq!(doc.kind, MapKind::Cognitive);
    assert_eq!(doc.components.len(), 2);
    assert_eq!(doc.components[0].nodes, ["C1", "C2", "C3"]);
    assert_eq!(doc.components[1].edges[0].weight, Some(NeutroValue::new(2, 1)));
    assert_eq!(doc.scenarios[0].on, [vec!["C1".to_string()], vec!["E2".to_string()]]);

    let map = doc.to_cognitive_map().unwrap();
    assert_eq!(map.matrix().to_string(), "0 1 0\n0 0 -1\nI 0 0\n---\n0 2+I\n0 0\n");
    match doc.initial_state(&ScenarioSpec::Named("start".into())).unwrap() {
        InitialState::Cognitive(s) => assert_eq!(s.to_string(), "1 0 0 ∪ 0 1"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn canonical_round_trip() {
    let doc = parse(COGNITIVE).unwrap();
    let text = serialize(&doc);
    assert_eq!(parse(&text).unwrap(), doc);
    assert_eq!(serialize(&parse(&text).unwrap()), text);
    assert!(text.starts_with("kind cognitive\npolicy k=1 mode=real\nscenario \"start\"\n"));
    assert!(text.contains("nodes C1 C2 C3\norder C1 C2 C3\n"));
}

#[test]
fn json_mirror_round_trip() {
    let doc = parse(COGNITIVE).unwrap();
    let json = doc.to_json();
    assert_eq!(MapDocument::from_json(&json).unwrap(), doc);
}

#[test]
fn json_is_validated_like_text() {
    let mut doc = parse(COGNITIVE).unwrap();
    doc.components[0].edges[0].to = "C9".into();
    let err = MapDocument::from_json(&doc.to_json()).unwrap_err();
    assert!(err.to_string().contains("unknown node `C9`"), "{err}");
    assert!(MapDocument::from_json("{ nope").is_err());
}

#[test]
fn diagnostics_are_positioned() {
    let (l, c, m) = first_error("kind cognitive\n[component \"a\"]\nnodes A B\nA -> Z\n");
    assert_eq!((l, c), (4, 6));
    assert!(m.contains("unknown node `Z`"), "{m}");

    let (l, c, m) = first_error("kind cognitive\n[component \"a\"]\nnodes A B\nA -> B : x\n");
    assert_eq!((l, c), (4, 10));
    assert!(m.contains("malformed weight"), "{m}");

    let (l, c, _) = first_error("kind cognitive\n[component \"a\"]\nnodes A B\nA -> B : .5\n");
    assert_eq!((l, c), (4, 10));
}

#[test]
fn rejects_structural_errors() {
    let cases = [
        ("[component \"a\"]\nnodes A\n", "missing `kind`"),
        ("kind frobnicate\n", "unknown kind"),
        ("kind cognitive\n", "no components"),
        ("kind cognitive\n[component \"a\"]\nnodes A B\nA -- B\n", "directed"),
        ("kind cognitive\n[component \"a\"]\nnodes A B\nA -> A\n", "self-loop"),
        (
            "kind cognitive\n[component \"a\"]\nnodes A B\nA -> B\nA -> B : 2\n",
            "repeats",
        ),
        ("kind graph\n[component \"a\"]\nnodes A B\nA -> B\nA -- B\n", "repeats"),
        ("kind cognitive\n[component \"a\"]\nnodes A A\n", "declared twice"),
        ("kind cognitive\n[component \"a\"]\nnodes A B\norder A\n", "missing B"),
        (
            "kind cognitive\n[component \"a\"]\nnodes A\non \"s\" A\n",
            "not declared",
        ),
        (
            "kind cognitive\nscenario \"s\" domain\n[component \"a\"]\nnodes A\n",
            "relational",
        ),
        (
            "kind relational\nscenario \"s\"\n[component \"a\"]\ndomain D\nrange R\n",
            "needs a side",
        ),
        (
            "kind relational\n[component \"a\"]\ndomain D1 D2\nrange R\nD1 -> D2\n",
            "within one side",
        ),
        ("kind relational\n[component \"a\"]\nnodes A\n", "domain"),
        ("kind cognitive\nnodes A\n", "inside a [component]"),
        ("kind cognitive\n[component \"a\"\nnodes A\n", "missing `]`"),
        ("kind cognitive\n[component \"a]\n", "unterminated"),
        ("kind cognitive\npolicy k=0\n[component \"a\"]\nnodes A\n", "positive"),
        ("kind cognitive\n[matrix]\n1 0\n0 1\n", "graph documents"),
        ("kind graph\n[matrix]\n1 0\n0\n", "invalid matrix"),
        ("kind graph\n[matrix]\n1 zz\n", "malformed matrix entry `zz`"),
    ];
    for (text, needle) in cases {
        let all = errors(text);
        assert!(all.iter().any(|d| d.message.contains(needle)), "{text:?}: {all:?}");
    }
}

#[test]
fn reports_every_problem() {
    let text = "kind cognitive\n[component \"a\"]\nnodes A B\nA -> X\nY -> B\n";
    let all = errors(text);
    assert_eq!(all.len(), 2);
    assert_eq!((all[0].line, all[1].line), (4, 5));
}

#[test]
fn relational_document() {
    let text = "\
kind relational
policy k=2 mode=indet
scenario \"r\" range

[component \"one\"]
domain D1 D2
range R1 R2
D1 -> R2
R1 -> D2 : I
on \"r\" R1
";
    let doc = parse(text).unwrap();
    assert_eq!(
        doc.policy,
        ThresholdPolicy::new(2, ThresholdMode::IndetDominant).unwrap()
    );
    let map = doc.to_relational_map().unwrap();
    assert_eq!(map.matrix().to_string(), "0 1\nI 0\n");
    match doc.initial_state(&ScenarioSpec::Named("r".into())).unwrap() {
        InitialState::Relational(s) => {
            assert_eq!(s.side, Side::Range);
            assert_eq!(s.state.to_string(), "1 0");
        }
        other => panic!("{other:?}"),
    }
    assert_eq!(parse(&serialize(&doc)).unwrap(), doc);
    assert!(matches!(doc.to_cognitive_map(), Err(DocError::WrongKind { .. })));
}

#[test]
fn label_scenarios() {
    let doc = parse(COGNITIVE).unwrap();
    let s = |labels: &[&str]| doc.initial_state(&ScenarioSpec::Labels(labels.iter().map(|l| l.to_string()).collect()));
    assert_eq!(
        s(&["C2", "E1"]).unwrap(),
        InitialState::Cognitive(StateVector::from_bits(&[&[0, 1, 0], &[1, 0]]))
    );
    assert_eq!(
        s(&["2:E2"]).unwrap(),
        InitialState::Cognitive(StateVector::from_bits(&[&[0, 0, 0], &[0, 1]]))
    );
    assert_eq!(s(&["X"]), Err(DocError::UnresolvedLabel("X".into())));
    assert_eq!(s(&["1:E2"]), Err(DocError::UnresolvedLabel("1:E2".into())));
    assert_eq!(s(&["3:E2"]), Err(DocError::BadComponent("3:E2".into())));
    assert!(matches!(
        doc.initial_state(&ScenarioSpec::Named("nope".into())),
        Err(DocError::UnknownScenario(_))
    ));
}

#[test]
fn graph_document_with_matrix() {
    let text = "\
kind graph
[component \"g\"]
nodes a b c
a -- b
b ~~ c
a -> c : 3
[matrix]
.3 -.6
.2I 1
---
0 I
1 0
";
    let doc = parse(text).unwrap();
    let g = doc.to_ngraph().unwrap();
    assert_eq!(g.component(0).edges()[1].kind, EdgeKind::Indeterminate);
    assert!(!g.component(0).edges()[2].is_indeterminate());
    assert_eq!(doc.matrix.as_ref().unwrap().k(), 2);
    assert_eq!(parse(&serialize(&doc)).unwrap(), doc);
    assert_eq!(doc.primary_matrix().unwrap().to_string(), "0 1 1\n1 0 I\n0 I 0\n");
}

#[test]
fn matrix_only_graph_document() {
    let doc = parse("kind graph\n[matrix]\n1 .5\n").unwrap();
    assert!(doc.components.is_empty());
    assert_eq!(doc.to_ngraph(), Err(DocError::NoComponents));
}

#[test]
fn quoted_names_escape() {
    let text =
        "kind cognitive\nscenario \"say \\\"hi\\\"\"\n[component \"a\\\\b\"]\nnodes A\non \"say \\\"hi\\\"\" A\n";
    let doc = parse(text).unwrap();
    assert_eq!(doc.scenarios[0].name, "say \"hi\"");
    assert_eq!(doc.components[0].name, "a\\b");
    assert_eq!(parse(&serialize(&doc)).unwrap(), doc);
}

#[test]
fn primed_labels_and_compact_weights() {
    let doc = parse("kind graph\n[component \"x\"]\nnodes v1' v2'\nv1' -- v2':2\n").unwrap();
    assert_eq!(doc.components[0].edges[0].weight, Some(NeutroValue::real(2)));
}

#[test]
fn identical_expert_components_are_allowed_in_maps() {
    let text = "kind cognitive\n[component \"a\"]\nnodes A B\nA -> B\n[component \"b\"]\nnodes A B\nA -> B\n";
    let doc = parse(text).unwrap();
    assert!(doc.to_cognitive_map().is_ok());
    assert!(matches!(
        doc.to_ngraph(),
        Err(DocError::Graph(GraphError::NotDistinct(0, 1)))
    ));
}
