use std::collections::{BTreeMap, BTreeSet};

use super::{ComponentBlock, Diagnostic, Diagnostics, EdgeDecl, EdgeOp, MapDocument, MapKind, Scenario};
use crate::neutro::{NeutroValue, ThresholdMode, ThresholdPolicy};
use crate::nmatrix::{DecimalValue, NMatrix};
use crate::relational::Side;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pos {
    line: usize,
    col: usize,
}

#[derive(Clone, Debug)]
struct Tok {
    text: String,
    pos: Pos,
    quoted: bool,
}

impl Tok {
    fn is(&self, s: &str) -> bool {
        !self.quoted && self.text == s
    }
}

fn is_punct(c: char) -> bool {
    matches!(c, ':' | '[' | ']')
}

fn tokenize(line: &str, lno: usize) -> Result<Vec<Tok>, Diagnostic> {
    let chars: Vec<char> = line.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line: lno, col: i + 1 };
        if c.is_whitespace() {
            i += 1;
        } else if c == '#' {
            break;
        } else if c == '"' {
            let mut text = String::new();
            i += 1;
            loop {
                match chars.get(i) {
                    None => {
                        return Err(Diagnostic {
                            line: lno,
                            column: pos.col,
                            message: "unterminated string".into(),
                        })
                    }
                    Some('"') => {
                        i += 1;
                        break;
                    }
                    Some('\\') if matches!(chars.get(i + 1), Some('"') | Some('\\')) => {
                        text.push(chars[i + 1]);
                        i += 2;
                    }
                    Some(&ch) => {
                        text.push(ch);
                        i += 1;
                    }
                }
            }
            toks.push(Tok {
                text,
                pos,
                quoted: true,
            });
        } else if is_punct(c) {
            toks.push(Tok {
                text: c.to_string(),
                pos,
                quoted: false,
            });
            i += 1;
        } else {
            let start = i;
            while i < chars.len() && !chars[i].is_whitespace() && !matches!(chars[i], '"' | '#') && !is_punct(chars[i])
            {
                i += 1;
            }
            toks.push(Tok {
                text: chars[start..i].iter().collect(),
                pos,
                quoted: false,
            });
        }
    }
    Ok(toks)
}

fn valid_label(t: &Tok) -> bool {
    !t.quoted && !t.text.starts_with(is_punct) && !matches!(t.text.as_str(), "->" | "--" | "~~")
}

struct RawEdge {
    decl: EdgeDecl,
    from: Pos,
    to: Pos,
    op: Pos,
}

struct RawComponent {
    name: String,
    pos: Pos,
    nodes: Vec<Tok>,
    domain: Vec<Tok>,
    range: Vec<Tok>,
    order: Option<(Pos, Vec<Tok>)>,
    edges: Vec<RawEdge>,
    ons: Vec<(Tok, Vec<Tok>)>,
}

struct RawScenario {
    name: String,
    pos: Pos,
    side: Option<Side>,
}

struct MatrixBlock {
    pos: Pos,
    components: Vec<Vec<Vec<DecimalValue>>>,
}

enum Section {
    Preamble,
    Component,
    Matrix,
}

#[derive(Default)]
struct Parser {
    diags: Vec<Diagnostic>,
    kind: Option<(Pos, MapKind)>,
    policy: Option<ThresholdPolicy>,
    scenarios: Vec<RawScenario>,
    components: Vec<RawComponent>,
    matrix: Option<MatrixBlock>,
}

impl Parser {
    fn error(&mut self, pos: Pos, message: impl Into<String>) {
        self.diags.push(Diagnostic {
            line: pos.line,
            column: pos.col,
            message: message.into(),
        });
    }

    fn header(&mut self, toks: &[Tok]) -> Option<Section> {
        let close = toks.iter().position(|t| t.is("]"));
        let Some(close) = close else {
            self.error(toks[0].pos, "section header is missing `]`");
            return None;
        };
        if let Some(extra) = toks.get(close + 1) {
            self.error(extra.pos, format!("unexpected `{}` after section header", extra.text));
        }
        let inner = &toks[1..close];
        match inner.first() {
            Some(t) if t.is("component") => {
                let name = match inner.get(1) {
                    Some(n) if n.quoted => n.text.clone(),
                    Some(n) => {
                        self.error(n.pos, "component names must be quoted");
                        n.text.clone()
                    }
                    None => format!("component {}", self.components.len() + 1),
                };
                if let Some(extra) = inner.get(2) {
                    self.error(extra.pos, format!("unexpected `{}` in component header", extra.text));
                }
                self.components.push(RawComponent {
                    name,
                    pos: toks[0].pos,
                    nodes: vec![],
                    domain: vec![],
                    range: vec![],
                    order: None,
                    edges: vec![],
                    ons: vec![],
                });
                Some(Section::Component)
            }
            Some(t) if t.is("matrix") => {
                if let Some(extra) = inner.get(1) {
                    self.error(extra.pos, format!("unexpected `{}` in matrix header", extra.text));
                }
                if self.matrix.is_some() {
                    self.error(toks[0].pos, "only one [matrix] section is allowed");
                }
                self.matrix = Some(MatrixBlock {
                    pos: toks[0].pos,
                    components: vec![vec![]],
                });
                Some(Section::Matrix)
            }
            Some(t) => {
                self.error(
                    t.pos,
                    format!("unknown section `{}`; expected `component` or `matrix`", t.text),
                );
                None
            }
            None => {
                self.error(toks[0].pos, "empty section header");
                None
            }
        }
    }

    fn matrix_line(&mut self, line: &str, lno: usize) {
        let content = line.split('#').next().unwrap_or("");
        let block = self.matrix.as_mut().expect("inside a matrix section");
        if content.trim() == "---" {
            block.components.push(vec![]);
            return;
        }
        let mut row = Vec::new();
        let mut bad = Vec::new();
        let mut col = 0;
        for piece in content.split_inclusive(char::is_whitespace) {
            let tok = piece.trim_end();
            if !tok.is_empty() {
                match tok.parse::<DecimalValue>() {
                    Ok(v) => row.push(v),
                    Err(_) => bad.push((col + 1, tok.to_string())),
                }
            }
            col += piece.chars().count();
        }
        if !row.is_empty() && bad.is_empty() {
            block.components.last_mut().expect("non-empty").push(row);
        }
        for (c, tok) in bad {
            self.error(Pos { line: lno, col: c }, format!("malformed matrix entry `{tok}`"));
        }
    }

    fn directive(&mut self, toks: &[Tok], in_component: bool) {
        let head = &toks[0];
        if toks.len() >= 2 && !toks[1].quoted && matches!(toks[1].text.as_str(), "->" | "--" | "~~") {
            if in_component {
                self.edge(toks);
            } else {
                self.error(head.pos, "edges must appear inside a [component] section");
            }
            return;
        }
        if head.quoted {
            self.error(head.pos, "expected a directive or an edge");
            return;
        }
        match head.text.as_str() {
            "kind" => self.kind_line(toks),
            "policy" => self.policy_line(toks),
            "scenario" => self.scenario_line(toks),
            "nodes" | "domain" | "range" | "order" | "on" if !in_component => {
                self.error(
                    head.pos,
                    format!("`{}` must appear inside a [component] section", head.text),
                );
            }
            "nodes" | "domain" | "range" => {
                let labels = self.labels(&toks[1..]);
                let comp = self.components.last_mut().expect("in component");
                match head.text.as_str() {
                    "nodes" => comp.nodes.extend(labels),
                    "domain" => comp.domain.extend(labels),
                    _ => comp.range.extend(labels),
                }
            }
            "order" => {
                let labels = self.labels(&toks[1..]);
                let comp = self.components.last_mut().expect("in component");
                if comp.order.is_some() {
                    self.error(head.pos, "`order` given twice in one component");
                } else {
                    comp.order = Some((head.pos, labels));
                }
            }
            "on" => match toks.get(1) {
                Some(name) if name.quoted => {
                    let labels = self.labels(&toks[2..]);
                    let comp = self.components.last_mut().expect("in component");
                    comp.ons.push((name.clone(), labels));
                }
                Some(t) => self.error(t.pos, "scenario names must be quoted"),
                None => self.error(head.pos, "`on` needs a scenario name"),
            },
            other => self.error(head.pos, format!("unknown directive `{other}`")),
        }
    }

    fn labels(&mut self, toks: &[Tok]) -> Vec<Tok> {
        let mut out = Vec::new();
        for t in toks {
            if !valid_label(t) {
                self.error(t.pos, format!("`{}` is not a valid node label", t.text));
            } else {
                out.push(t.clone());
            }
        }
        out
    }

    fn kind_line(&mut self, toks: &[Tok]) {
        let kind = match toks.get(1).map(|t| t.text.as_str()) {
            Some("cognitive") => MapKind::Cognitive,
            Some("relational") => MapKind::Relational,
            Some("graph") => MapKind::Graph,
            Some(other) => {
                self.error(
                    toks[1].pos,
                    format!("unknown kind `{other}`; expected cognitive, relational or graph"),
                );
                return;
            }
            None => {
                self.error(toks[0].pos, "`kind` needs a value");
                return;
            }
        };
        if let Some(extra) = toks.get(2) {
            self.error(extra.pos, format!("unexpected `{}`", extra.text));
        }
        if self.kind.is_some() {
            self.error(toks[0].pos, "`kind` given twice");
        } else {
            self.kind = Some((toks[0].pos, kind));
        }
    }

    fn policy_line(&mut self, toks: &[Tok]) {
        let mut k = 1;
        let mut mode = ThresholdMode::RealDominant;
        for t in &toks[1..] {
            match t.text.split_once('=') {
                Some(("k", v)) => match v.parse::<i64>() {
                    Ok(n) if n >= 1 => k = n,
                    _ => self.error(t.pos, format!("threshold must be a positive integer, got `{v}`")),
                },
                Some(("mode", v)) => match v.parse::<ThresholdMode>() {
                    Ok(m) => mode = m,
                    Err(_) => self.error(t.pos, format!("unknown mode `{v}`; expected real or indet")),
                },
                _ => self.error(
                    t.pos,
                    format!("expected `k=<n>` or `mode=<real|indet>`, got `{}`", t.text),
                ),
            }
        }
        if self.policy.is_some() {
            self.error(toks[0].pos, "`policy` given twice");
        }
        self.policy = Some(ThresholdPolicy::new(k, mode).expect("k checked"));
    }

    fn scenario_line(&mut self, toks: &[Tok]) {
        let name = match toks.get(1) {
            Some(t) if t.quoted => t.text.clone(),
            Some(t) => {
                self.error(t.pos, "scenario names must be quoted");
                return;
            }
            None => {
                self.error(toks[0].pos, "`scenario` needs a name");
                return;
            }
        };
        let side = match toks.get(2) {
            Some(t) if t.is("domain") => Some(Side::Domain),
            Some(t) if t.is("range") => Some(Side::Range),
            Some(t) => {
                self.error(t.pos, format!("expected `domain` or `range`, got `{}`", t.text));
                None
            }
            None => None,
        };
        if let Some(extra) = toks.get(3) {
            self.error(extra.pos, format!("unexpected `{}`", extra.text));
        }
        if self.scenarios.iter().any(|s| s.name == name) {
            self.error(toks[1].pos, format!("scenario `{name}` declared twice"));
            return;
        }
        self.scenarios.push(RawScenario {
            name,
            pos: toks[0].pos,
            side,
        });
    }

    fn edge(&mut self, toks: &[Tok]) {
        let op = match toks[1].text.as_str() {
            "->" => EdgeOp::Directed,
            "--" => EdgeOp::Undirected,
            _ => EdgeOp::Indeterminate,
        };
        let Some(to) = toks.get(2) else {
            self.error(toks[1].pos, "edge is missing its target");
            return;
        };
        for t in [&toks[0], to] {
            if !valid_label(t) {
                self.error(t.pos, format!("`{}` is not a valid node label", t.text));
                return;
            }
        }
        let weight = match toks.get(3) {
            None => None,
            Some(colon) if colon.is(":") => match toks.get(4) {
                None => {
                    self.error(colon.pos, "missing weight after `:`");
                    return;
                }
                Some(w) => match w.text.parse::<NeutroValue>() {
                    Ok(v) if !w.quoted => Some(v),
                    _ => {
                        let hint = if w.text.parse::<DecimalValue>().is_ok() {
                            "; decimal values are only accepted in a [matrix] section"
                        } else {
                            ""
                        };
                        self.error(w.pos, format!("malformed weight `{}`{hint}", w.text));
                        return;
                    }
                },
            },
            Some(t) => {
                self.error(t.pos, format!("expected `:` before a weight, got `{}`", t.text));
                return;
            }
        };
        if let Some(extra) = toks.get(5) {
            self.error(extra.pos, format!("unexpected `{}` after edge", extra.text));
            return;
        }
        let comp = self.components.last_mut().expect("in component");
        comp.edges.push(RawEdge {
            decl: EdgeDecl {
                from: toks[0].text.clone(),
                to: to.text.clone(),
                op,
                weight,
            },
            from: toks[0].pos,
            to: to.pos,
            op: toks[1].pos,
        });
    }

    fn finish(mut self) -> Result<MapDocument, Diagnostics> {
        let kind = match self.kind {
            Some((_, k)) => k,
            None => {
                self.error(
                    Pos { line: 1, col: 1 },
                    "missing `kind` line (cognitive, relational or graph)",
                );
                MapKind::Graph
            }
        };
        let relational = kind == MapKind::Relational;
        for s in &self.scenarios {
            let (pos, name) = (s.pos, s.name.clone());
            match (relational, s.side) {
                (true, None) => self
                    .diags
                    .push(diag(pos, format!("scenario `{name}` needs a side (domain or range)"))),
                (false, Some(_)) => self.diags.push(diag(
                    pos,
                    format!("scenario `{name}`: sides only apply to relational documents"),
                )),
                _ => {}
            }
        }
        let raw = std::mem::take(&mut self.components);
        let mut components = Vec::with_capacity(raw.len());
        let mut ons: Vec<BTreeMap<String, BTreeSet<String>>> = Vec::new();
        for comp in &raw {
            let (block, on) = self.component(kind, comp);
            components.push(block);
            ons.push(on);
        }
        let matrix = match self.matrix.take() {
            None => None,
            Some(block) => {
                if kind != MapKind::Graph {
                    self.error(block.pos, "[matrix] sections are only allowed in graph documents");
                }
                match NMatrix::from_rows(block.components) {
                    Ok(m) => Some(m),
                    Err(e) => {
                        self.error(block.pos, format!("invalid matrix: {e}"));
                        None
                    }
                }
            }
        };
        if components.is_empty() && (kind != MapKind::Graph || matrix.is_none()) {
            let pos = self.kind.map(|(p, _)| p).unwrap_or(Pos { line: 1, col: 1 });
            self.error(pos, "document declares no components");
        }
        let scenarios = self
            .scenarios
            .iter()
            .map(|s| Scenario {
                name: s.name.clone(),
                side: s.side,
                on: ons
                    .iter()
                    .map(|m| {
                        m.get(&s.name)
                            .map(|set| set.iter().cloned().collect())
                            .unwrap_or_default()
                    })
                    .collect(),
            })
            .collect();
        if !self.diags.is_empty() {
            self.diags.sort_by_key(|d| (d.line, d.column));
            return Err(Diagnostics(self.diags));
        }
        Ok(MapDocument {
            kind,
            policy: self.policy.unwrap_or_default(),
            scenarios,
            components,
            matrix,
        })
    }

    fn component(
        &mut self,
        kind: MapKind,
        comp: &RawComponent,
    ) -> (ComponentBlock, BTreeMap<String, BTreeSet<String>>) {
        let relational = kind == MapKind::Relational;
        let name = &comp.name;
        if relational {
            if let Some(t) = comp.nodes.first() {
                self.error(t.pos, "relational components use `domain` and `range`, not `nodes`");
            }
            if comp.domain.is_empty() || comp.range.is_empty() {
                self.error(
                    comp.pos,
                    format!("component `{name}` needs non-empty `domain` and `range` lines"),
                );
            }
        } else {
            if let Some(t) = comp.domain.first().or(comp.range.first()) {
                self.error(
                    t.pos,
                    "`domain` and `range` only apply to relational documents".to_string(),
                );
            }
            if comp.nodes.is_empty() {
                self.error(comp.pos, format!("component `{name}` declares no nodes"));
            }
        }

        // label -> Some(side) for relational, None otherwise
        let mut sides: BTreeMap<&str, Option<Side>> = BTreeMap::new();
        let groups = [
            (&comp.nodes, None),
            (&comp.domain, Some(Side::Domain)),
            (&comp.range, Some(Side::Range)),
        ];
        for (toks, side) in groups {
            for t in toks.iter() {
                if sides.insert(&t.text, side).is_some() {
                    self.error(
                        t.pos,
                        format!("label `{}` declared twice in component `{name}`", t.text),
                    );
                }
            }
        }

        if let Some((pos, order)) = &comp.order {
            let mut seen = BTreeSet::new();
            for t in order {
                if !sides.contains_key(t.text.as_str()) {
                    self.error(
                        t.pos,
                        format!("`{}` in `order` is not a node of component `{name}`", t.text),
                    );
                } else if !seen.insert(t.text.as_str()) {
                    self.error(t.pos, format!("`{}` appears twice in `order`", t.text));
                }
            }
            let missing: Vec<&str> = sides.keys().filter(|l| !seen.contains(*l)).copied().collect();
            if !missing.is_empty() {
                self.error(*pos, format!("`order` is missing {}", missing.join(", ")));
            }
        }

        let mut cells: BTreeSet<(String, String)> = BTreeSet::new();
        for e in &comp.edges {
            let d = &e.decl;
            let mut ok = true;
            for (label, pos) in [(&d.from, e.from), (&d.to, e.to)] {
                if !sides.contains_key(label.as_str()) {
                    self.error(pos, format!("unknown node `{label}` in component `{name}`"));
                    ok = false;
                }
            }
            if !ok {
                continue;
            }
            if d.from == d.to {
                self.error(e.from, format!("self-loop at `{}`", d.from));
                continue;
            }
            let touched: Vec<(String, String)> = if relational {
                let (a, b) = (sides[d.from.as_str()], sides[d.to.as_str()]);
                if a == b {
                    self.error(
                        e.op,
                        format!("edge {} {} {} lies within one side", d.from, d.op.symbol(), d.to),
                    );
                    continue;
                }
                if a == Some(Side::Domain) {
                    vec![(d.from.clone(), d.to.clone())]
                } else {
                    vec![(d.to.clone(), d.from.clone())]
                }
            } else {
                if kind == MapKind::Cognitive && d.op != EdgeOp::Directed {
                    self.error(e.op, "cognitive maps only take directed `->` edges");
                    continue;
                }
                let fwd = (d.from.clone(), d.to.clone());
                if d.op == EdgeOp::Directed {
                    vec![fwd]
                } else {
                    vec![fwd, (d.to.clone(), d.from.clone())]
                }
            };
            if touched.iter().any(|c| cells.contains(c)) {
                self.error(
                    e.from,
                    format!("edge {} {} {} repeats an earlier edge", d.from, d.op.symbol(), d.to),
                );
                continue;
            }
            cells.extend(touched);
        }

        let mut on: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
        for (scen, labels) in &comp.ons {
            let Some(decl) = self.scenarios.iter().find(|s| s.name == scen.text) else {
                self.error(scen.pos, format!("scenario `{}` is not declared", scen.text));
                continue;
            };
            let want = decl.side;
            let set = on.entry(scen.text.clone()).or_default();
            let mut errs = Vec::new();
            for t in labels {
                match sides.get(t.text.as_str()) {
                    None => errs.push((t.pos, format!("unknown node `{}` in component `{name}`", t.text))),
                    Some(side) if relational && want.is_some() && *side != want => errs.push((
                        t.pos,
                        format!(
                            "`{}` is not on the {} side of scenario `{}`",
                            t.text,
                            want.expect("some"),
                            scen.text
                        ),
                    )),
                    Some(_) => {
                        set.insert(t.text.clone());
                    }
                }
            }
            for (p, m) in errs {
                self.error(p, m);
            }
        }

        let sorted = |toks: &[Tok]| {
            let mut v: Vec<String> = toks.iter().map(|t| t.text.clone()).collect();
            v.sort();
            v.dedup();
            v
        };
        let block = ComponentBlock {
            name: name.clone(),
            nodes: sorted(&comp.nodes),
            domain: sorted(&comp.domain),
            range: sorted(&comp.range),
            order: comp
                .order
                .as_ref()
                .map(|(_, o)| o.iter().map(|t| t.text.clone()).collect()),
            edges: comp.edges.iter().map(|e| e.decl.clone()).collect(),
        };
        (block, on)
    }
}

fn diag(pos: Pos, message: String) -> Diagnostic {
    Diagnostic {
        line: pos.line,
        column: pos.col,
        message,
    }
}

/// Parses a `.nmap` document. Every problem found is reported with its
/// line and column; the parser never panics on malformed input.
pub fn parse(text: &str) -> Result<MapDocument, Diagnostics> {
    let mut p = Parser::default();
    let mut section = Section::Preamble;
    for (n, line) in text.lines().enumerate() {
        let lno = n + 1;
        if matches!(section, Section::Matrix) && !line.trim_start().starts_with('[') {
            p.matrix_line(line, lno);
            continue;
        }
        let toks = match tokenize(line, lno) {
            Ok(t) => t,
            Err(d) => {
                p.diags.push(d);
                continue;
            }
        };
        if toks.is_empty() {
            continue;
        }
        if toks[0].is("[") {
            match p.header(&toks) {
                Some(s) => section = s,
                // keep consuming lines without attaching them anywhere
                None => section = Section::Preamble,
            }
            continue;
        }
        let in_component = matches!(section, Section::Component);
        p.directive(&toks, in_component);
    }
    p.finish()
}
