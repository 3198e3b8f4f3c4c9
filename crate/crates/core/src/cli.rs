//! Command implementations behind the `nmaps` binary. Each command returns
//! an [`Outcome`] instead of printing, so tests can drive them directly.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::cognitive::{CognitiveMap, HiddenPattern};
use crate::dynamics::{MapError, Verdict};
use crate::mapfile::{self, InitialState, MapDocument, MapKind, ScenarioSpec};
use crate::neutro::{ThresholdMode, ThresholdPolicy};
use crate::ngraph::{GluingVerdict, Graph, NeutroGraphClass};
use crate::nmatrix::{Content, NMatrix, Shape};
use crate::relational::{RelationalHiddenPattern, RelationalMap};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: impl Into<String>) -> Self {
        let mut stderr = stderr.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Which {
    /// The connection matrix of a map, or the adjacency of a graph.
    #[default]
    Map,
    Adjacency,
    Incidence,
    Weighted,
    Kirchhoff,
}

/// Loads a `.nmap` file, or its JSON mirror when the name ends in `.json`.
pub fn load(path: &Path) -> Result<MapDocument, Outcome> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Outcome::fail(EXIT_USAGE, format!("error: cannot read {}: {e}", path.display())))?;
    let parsed = if path.extension().is_some_and(|e| e == "json") {
        MapDocument::from_json(&text)
    } else {
        mapfile::parse(&text)
    };
    parsed.map_err(|diags| {
        let mut msg = String::new();
        for d in &diags.0 {
            writeln!(msg, "{}:{d}", path.display()).unwrap();
        }
        Outcome::fail(EXIT_USAGE, msg)
    })
}

fn user_error(e: impl std::fmt::Display) -> Outcome {
    Outcome::fail(EXIT_USAGE, format!("error: {e}"))
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialise");
    s.push('\n');
    s
}

#[derive(Debug, Serialize)]
struct MatrixReport {
    shape: Shape,
    dims: Vec<(usize, usize)>,
    content: Content,
}

impl MatrixReport {
    fn of<T: crate::nmatrix::Entry>(m: &NMatrix<T>) -> Self {
        let kind = m.classify();
        MatrixReport {
            shape: kind.shape,
            dims: m.components().iter().map(|c| c.dims()).collect(),
            content: kind.content,
        }
    }

    fn describe(&self) -> String {
        let dims: Vec<String> = self.dims.iter().map(|(r, c)| format!("{r}x{c}")).collect();
        format!("{} {}, {}", self.shape, dims.join(" ∪ "), self.content)
    }
}

#[derive(Debug, Serialize)]
struct ClassifyReport {
    kind: MapKind,
    components: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    matrix: Option<MatrixReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    literal_matrix: Option<MatrixReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gluing: Option<GluingVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    neutrosophic: Option<NeutroGraphClass>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bipartite: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    strongly_biconnected: Option<bool>,
    warnings: Vec<String>,
}

pub fn classify(path: &Path, format: Format) -> Outcome {
    let doc = match load(path) {
        Ok(d) => d,
        Err(o) => return o,
    };
    let mut report = ClassifyReport {
        kind: doc.kind,
        components: doc.components.len(),
        matrix: None,
        literal_matrix: doc.matrix.as_ref().map(MatrixReport::of),
        gluing: None,
        neutrosophic: None,
        bipartite: None,
        strongly_biconnected: None,
        warnings: vec![],
    };
    if !doc.components.is_empty() {
        match doc.primary_matrix() {
            Ok(m) => {
                for (i, j) in m.duplicate_components() {
                    report
                        .warnings
                        .push(format!("components {} and {} are identical", i + 1, j + 1));
                }
                report.matrix = Some(MatrixReport::of(&m));
            }
            Err(e) => report.warnings.push(e.to_string()),
        }
        match doc.to_ngraph() {
            Ok(g) => {
                report.neutrosophic = Some(g.neutrosophic_classify());
                if g.k() == 2 {
                    report.gluing = g.gluing_classify().ok().map(|c| c.verdict);
                }
                let b = g.bipartite_structure();
                report.bipartite = Some(b.is_bipartite_ngraph);
                if g.k() == 2 {
                    report.strongly_biconnected = Some(b.is_strongly_biconnected);
                }
            }
            Err(e) => report.warnings.push(format!("not an n-graph: {e}")),
        }
    }
    let stdout = match format {
        Format::Json => json(&report),
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "kind: {}", report.kind).unwrap();
            writeln!(out, "components: {}", report.components).unwrap();
            if let Some(m) = &report.matrix {
                writeln!(out, "matrix: {}", m.describe()).unwrap();
            }
            if let Some(m) = &report.literal_matrix {
                writeln!(out, "literal matrix: {}", m.describe()).unwrap();
            }
            if let Some(g) = report.gluing {
                writeln!(out, "gluing: {g}").unwrap();
            }
            if let Some(n) = report.neutrosophic {
                writeln!(out, "neutrosophic: {n}").unwrap();
            }
            if let Some(b) = report.bipartite {
                writeln!(out, "bipartite: {}", yes_no(b)).unwrap();
            }
            if let Some(b) = report.strongly_biconnected {
                writeln!(out, "strongly biconnected: {}", yes_no(b)).unwrap();
            }
            for w in &report.warnings {
                writeln!(out, "warning: {w}").unwrap();
            }
            out
        }
    };
    Outcome::ok(stdout)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    pub scenario: Option<String>,
    /// `Some(vec![])` starts with every node off.
    pub on: Option<Vec<String>>,
    pub all_scenarios: bool,
    pub threshold: Option<i64>,
    pub mode: Option<ThresholdMode>,
    pub format: Format,
    pub trace: bool,
}

enum Engine {
    Cognitive(CognitiveMap),
    Relational(RelationalMap),
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
enum RunResult {
    Cognitive(HiddenPattern),
    Relational(RelationalHiddenPattern),
}

#[derive(Debug, Serialize)]
struct RunReport {
    scenario: String,
    policy: ThresholdPolicy,
    #[serde(flatten)]
    result: RunResult,
}

pub fn run(path: &Path, opts: &RunOptions) -> Outcome {
    let doc = match load(path) {
        Ok(d) => d,
        Err(o) => return o,
    };
    let engine = match doc.kind {
        MapKind::Cognitive => doc.to_cognitive_map().map(Engine::Cognitive),
        MapKind::Relational => doc.to_relational_map().map(Engine::Relational),
        MapKind::Graph => {
            return Outcome::fail(
                EXIT_USAGE,
                "error: `run` needs a cognitive or relational map; this is a graph document",
            )
        }
    };
    let engine = match engine {
        Ok(e) => e,
        Err(e) => return user_error(e),
    };
    let mut policy = doc.policy;
    if let Some(k) = opts.threshold {
        policy = match policy.with_k(k) {
            Ok(p) => p,
            Err(e) => return user_error(e),
        };
    }
    if let Some(m) = opts.mode {
        policy = policy.with_mode(m);
    }

    let chosen = [opts.scenario.is_some(), opts.on.is_some(), opts.all_scenarios];
    if chosen.iter().filter(|&&c| c).count() != 1 {
        return Outcome::fail(
            EXIT_USAGE,
            "error: give exactly one of --scenario, --on or --all-scenarios",
        );
    }
    let specs: Vec<(String, ScenarioSpec)> = if opts.all_scenarios {
        if doc.scenarios.is_empty() {
            return Outcome::fail(EXIT_USAGE, "error: the document declares no scenarios");
        }
        doc.scenarios
            .iter()
            .map(|s| (s.name.clone(), ScenarioSpec::Named(s.name.clone())))
            .collect()
    } else if let Some(name) = &opts.scenario {
        vec![(name.clone(), ScenarioSpec::Named(name.clone()))]
    } else {
        let on: Vec<String> = opts.on.iter().flatten().filter(|l| !l.is_empty()).cloned().collect();
        vec![(format!("on {}", on.join(",")), ScenarioSpec::Labels(on))]
    };

    let mut starts = Vec::with_capacity(specs.len());
    for (name, spec) in &specs {
        match doc.initial_state(spec) {
            Ok(s) => starts.push((name.clone(), s)),
            Err(e) => return user_error(e),
        }
    }

    // Scenario runs share nothing, so each gets its own thread.
    let results: Vec<Result<RunReport, MapError>> = std::thread::scope(|scope| {
        let handles: Vec<_> = starts
            .iter()
            .map(|(name, start)| {
                let engine = &engine;
                scope.spawn(move || {
                    let result = match (engine, start) {
                        (Engine::Cognitive(m), InitialState::Cognitive(s)) => {
                            m.hidden_pattern(s, policy).map(RunResult::Cognitive)
                        }
                        (Engine::Relational(m), InitialState::Relational(s)) => {
                            m.hidden_pattern(s, policy).map(RunResult::Relational)
                        }
                        _ => unreachable!("initial state kind follows the document kind"),
                    };
                    result.map(|result| RunReport {
                        scenario: name.clone(),
                        policy,
                        result,
                    })
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("scenario thread panicked"))
            .collect()
    });
    let mut reports = Vec::with_capacity(results.len());
    for r in results {
        match r {
            Ok(r) => reports.push(r),
            Err(e) => return user_error(e),
        }
    }

    let stdout = match opts.format {
        Format::Json => {
            let mut value: Vec<serde_json::Value> = reports
                .iter()
                .map(|r| {
                    let mut v = serde_json::to_value(r).expect("reports serialise");
                    if !opts.trace {
                        let obj = v.as_object_mut().expect("object");
                        obj.remove("trace");
                        obj.remove("rounds");
                    }
                    v
                })
                .collect();
            if opts.all_scenarios {
                json(&value)
            } else {
                json(&value.remove(0))
            }
        }
        Format::Text => {
            let mut out = String::new();
            for (n, r) in reports.iter().enumerate() {
                if opts.all_scenarios {
                    if n > 0 {
                        out.push('\n');
                    }
                    writeln!(out, "== scenario \"{}\" ==", r.scenario).unwrap();
                }
                render_text(&mut out, r, opts.trace);
            }
            out
        }
    };
    Outcome::ok(stdout)
}

fn render_text(out: &mut String, r: &RunReport, trace: bool) {
    writeln!(out, "policy: k={} mode={}", r.policy.k(), r.policy.mode()).unwrap();
    match &r.result {
        RunResult::Cognitive(h) => {
            if trace {
                for (i, s) in h.trace.iter().enumerate() {
                    writeln!(out, "step {i}: {s}").unwrap();
                }
            }
            writeln!(out, "iterations: {}", h.iterations).unwrap();
            for (c, v) in h.verdicts.iter().enumerate() {
                writeln!(out, "{}", verdict_line(c, v)).unwrap();
            }
        }
        RunResult::Relational(h) => {
            if trace {
                let tag = match h.start.side {
                    crate::relational::Side::Domain => "D",
                    crate::relational::Side::Range => "R",
                };
                writeln!(out, "start {tag}: {}", h.start.state).unwrap();
                for (i, (d, rg)) in h.rounds.iter().enumerate() {
                    writeln!(out, "round {} D: {d}", i + 1).unwrap();
                    writeln!(out, "round {} R: {rg}", i + 1).unwrap();
                }
            }
            writeln!(out, "iterations: {}", h.iterations).unwrap();
            for (c, (d, rg)) in h.domain.iter().zip(&h.range).enumerate() {
                writeln!(out, "HIDDEN: component {} = Domain: {d}; Range: {rg}", c + 1).unwrap();
            }
        }
    }
}

/// The `HIDDEN:` verdict text for one component, shared with the JSON
/// consistency tests.
pub fn verdict_line(component: usize, v: &Verdict) -> String {
    format!("HIDDEN: component {} = {v}", component + 1)
}

/// Sums aligned maps. Scenarios and policy are taken from the first file.
pub fn combine(paths: &[PathBuf], out: Option<&Path>) -> Outcome {
    if paths.len() < 2 {
        return Outcome::fail(EXIT_USAGE, "error: combine needs at least two maps");
    }
    let mut docs = Vec::with_capacity(paths.len());
    for p in paths {
        match load(p) {
            Ok(d) => docs.push(d),
            Err(o) => return o,
        }
    }
    let first = &docs[0];
    if let Some(d) = docs.iter().find(|d| d.kind != first.kind) {
        return user_error(format!("cannot combine a {} map with a {} map", first.kind, d.kind));
    }
    let names: Vec<String> = first.components.iter().map(|c| c.name.clone()).collect();
    let combined = match first.kind {
        MapKind::Cognitive => docs
            .iter()
            .map(MapDocument::to_cognitive_map)
            .collect::<Result<Vec<_>, _>>()
            .map_err(user_error)
            .and_then(|maps| CognitiveMap::combine(&maps).map_err(user_error))
            .map(|m| MapDocument::from_cognitive_map(&m, &names)),
        MapKind::Relational => docs
            .iter()
            .map(MapDocument::to_relational_map)
            .collect::<Result<Vec<_>, _>>()
            .map_err(user_error)
            .and_then(|maps| RelationalMap::combine(&maps).map_err(user_error))
            .map(|m| MapDocument::from_relational_map(&m, &names)),
        MapKind::Graph => return user_error("only cognitive and relational maps can be combined"),
    };
    let mut doc = match combined {
        Ok(d) => d,
        Err(o) => return o,
    };
    doc.policy = first.policy;
    doc.scenarios = first.scenarios.clone();
    let text = mapfile::serialize(&doc);
    match out {
        None => Outcome::ok(text),
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => Outcome::ok(String::new()),
            Err(e) => Outcome::fail(EXIT_INTERNAL, format!("error: cannot write {}: {e}", path.display())),
        },
    }
}

pub fn export_matrix(path: &Path, which: Which) -> Outcome {
    let doc = match load(path) {
        Ok(d) => d,
        Err(o) => return o,
    };
    if which == Which::Map {
        return match doc.primary_matrix() {
            Ok(m) => Outcome::ok(m.to_string()),
            Err(e) => user_error(e),
        };
    }
    let graphs: Vec<Graph> = match doc.components.iter().map(|c| c.to_graph()).collect() {
        Ok(g) => g,
        Err(e) => return user_error(e),
    };
    if graphs.is_empty() {
        return user_error("the document has no components");
    }
    let text = match which {
        Which::Map => unreachable!("handled above"),
        Which::Adjacency => join(graphs.iter().map(|g| Ok(g.adjacency().to_string()))),
        Which::Incidence => join(graphs.iter().map(|g| Ok(g.incidence().to_string()))),
        Which::Weighted => join(graphs.iter().map(|g| g.weighted().map(|m| m.to_string()))),
        Which::Kirchhoff => join(graphs.iter().map(|g| g.kirchhoff().map(|m| m.to_string()))),
    };
    match text {
        Ok(t) => Outcome::ok(t),
        Err(e) => user_error(e),
    }
}

fn join<E>(parts: impl Iterator<Item = Result<String, E>>) -> Result<String, E> {
    Ok(parts.collect::<Result<Vec<_>, _>>()?.join("---\n"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture(name: &str) -> PathBuf {
        Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
    }

    #[test]
    fn classify_relational_bimap() {
        let o = classify(&fixture("frbm.nmap"), Format::Text);
        assert_eq!(o.code, 0, "{}", o.stderr);
        assert!(
            o.stdout.contains("matrix: Rectangular 8x5 ∪ 8x5, Fuzzy\n"),
            "{}",
            o.stdout
        );
        assert!(o.stdout.contains("gluing: Disjoint\n"));
        assert!(o.stdout.contains("bipartite: yes\n"));
    }

    #[test]
    fn classify_rejects_malformed() {
        let o = classify(&fixture("malformed.nmap"), Format::Text);
        assert_eq!(o.code, EXIT_USAGE);
        assert!(
            o.stderr.contains("malformed.nmap:4:6: unknown node `C`"),
            "{}",
            o.stderr
        );
    }

    #[test]
    fn missing_file_is_a_user_error() {
        assert_eq!(classify(Path::new("/no/such/file.nmap"), Format::Text).code, EXIT_USAGE);
    }

    #[test]
    fn run_needs_one_scenario_source() {
        let o = run(&fixture("fcbm.nmap"), &RunOptions::default());
        assert_eq!(o.code, EXIT_USAGE);
        let both = RunOptions {
            scenario: Some("c1-e2".into()),
            on: Some(vec!["C1".into()]),
            ..RunOptions::default()
        };
        assert_eq!(run(&fixture("fcbm.nmap"), &both).code, EXIT_USAGE);
    }

    #[test]
    fn run_rejects_graph_documents() {
        let opts = RunOptions {
            on: Some(vec!["v1".into()]),
            ..RunOptions::default()
        };
        assert_eq!(run(&fixture("weak_bigraph.nmap"), &opts).code, EXIT_USAGE);
    }

    #[test]
    fn export_weighted_shows_absent_cells() {
        let o = export_matrix(&fixture("weighted_bigraph.nmap"), Which::Weighted);
        assert_eq!(o.code, 0, "{}", o.stderr);
        assert!(o.stdout.starts_with("∞ 6 4 ∞ ∞ 17 5\n"), "{}", o.stdout);
    }
}
