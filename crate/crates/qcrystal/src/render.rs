//! Deterministic serialization of graphs, components, vectors, and
//! matrices. Identical inputs give byte-identical output: everything is
//! emitted from sorted containers, and JSON objects are built field by
//! field.

use serde_json::json;

use crate::gbasis::Transition;
use crate::graph::{Component, CrystalGraph, EdgeLabel};
use crate::ktheory::{BasisTag, KClass};
use crate::lowest::{bar, decompose_lowest, hat, LowestDecomposition};
use crate::tensor::TensorVector;
use crate::verify::SuiteReport;
use crate::word::Word;

/// Version tag carried by every structured output.
pub const SCHEMA: &str = "qcrystal/1";

fn dot_label(label: EdgeLabel, ascii: bool) -> &'static str {
    match (label, ascii) {
        (EdgeLabel::Even, _) => "1",
        (EdgeLabel::Odd, false) => "1\u{0304}",
        (EdgeLabel::Odd, true) => "1bar",
    }
}

/// Solid arrows for the even operator, dashed for the odd one.
pub fn graph_to_dot(g: &CrystalGraph, ascii: bool) -> String {
    let mut out = String::new();
    out.push_str(&format!("// {SCHEMA}\n"));
    out.push_str("digraph crystal {\n  rankdir=TB;\n");
    for node in &g.nodes {
        out.push_str(&format!("  \"{node}\";\n"));
    }
    for e in &g.edges {
        let style = match e.label {
            EdgeLabel::Even => "",
            EdgeLabel::Odd => ", style=dashed",
        };
        out.push_str(&format!(
            "  \"{}\" -> \"{}\" [label=\"{}\"{}];\n",
            e.src,
            e.dst,
            dot_label(e.label, ascii),
            style
        ));
    }
    out.push_str("}\n");
    out
}

fn component_json_body(c: &Component) -> serde_json::Value {
    json!({
        "highest": c.highest.iter().map(Word::to_string).collect::<Vec<_>>(),
        "lowest": c.lowest.iter().map(Word::to_string).collect::<Vec<_>>(),
        "members": c.members.iter().map(Word::to_string).collect::<Vec<_>>(),
    })
}

pub fn graph_to_json(g: &CrystalGraph) -> serde_json::Value {
    json!({
        "schema": SCHEMA,
        "kind": "graph",
        "n": g.n,
        "mode": g.mode.to_string(),
        "nodes": g.nodes.iter().map(Word::to_string).collect::<Vec<_>>(),
        "edges": g.edges.iter().map(|e| json!({
            "src": e.src.to_string(),
            "dst": e.dst.to_string(),
            "label": e.label.as_str(),
        })).collect::<Vec<_>>(),
        "components": g.components().iter().map(component_json_body).collect::<Vec<_>>(),
    })
}

pub fn graph_to_tsv(g: &CrystalGraph) -> String {
    let mut out = format!("# {SCHEMA}\n");
    for e in &g.edges {
        out.push_str(&format!("{}\t{}\t{}\n", e.src, e.dst, e.label.as_str()));
    }
    out
}

pub fn graph_to_text(g: &CrystalGraph) -> String {
    let comps = g.components();
    let mut out = format!("# {SCHEMA}\n");
    out.push_str(&format!(
        "graph n={} mode={}: {} nodes, {} edges, {} components\n",
        g.n,
        g.mode,
        g.nodes.len(),
        g.edges.len(),
        comps.len()
    ));
    for c in &comps {
        out.push_str(&format!(
            "component ({} members) highest {}: {}\n",
            c.members.len(),
            join_words(&c.highest),
            join_words(&c.members)
        ));
    }
    out
}

fn join_words(words: &[Word]) -> String {
    words
        .iter()
        .map(Word::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// The decomposition data of a lowest word, bundled for output.
pub struct DecompositionView {
    pub word: Word,
    pub decomposition: LowestDecomposition,
    pub hat: Word,
    pub bar: Word,
}

impl DecompositionView {
    pub fn compute(l: &Word) -> crate::error::Result<DecompositionView> {
        let decomposition = decompose_lowest(l)?;
        Ok(DecompositionView {
            word: *l,
            hat: hat(l, &decomposition.a_set)?,
            bar: bar(l, &decomposition.a_set)?,
            decomposition,
        })
    }

    pub fn to_json_body(&self) -> serde_json::Value {
        json!({
            "word": self.word.to_string(),
            "segments": self.decomposition.segments,
            "trailing_two": self.decomposition.trailing_two,
            "a_set": self.decomposition.a_set,
            "hat": self.hat.to_string(),
            "bar": self.bar.to_string(),
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut body = self.to_json_body();
        let obj = body.as_object_mut().expect("object body");
        obj.insert("schema".into(), json!(SCHEMA));
        obj.insert("kind".into(), json!("decomposition"));
        body
    }

    pub fn to_text(&self) -> String {
        let segments = self
            .decomposition
            .segments
            .iter()
            .map(|s| {
                let kind = match s.kind {
                    crate::lowest::SegmentKind::TrivialLp => "trivial",
                    crate::lowest::SegmentKind::TwoBlock => "2-block",
                };
                format!("{}@{}..{}", kind, s.start, s.end)
            })
            .collect::<Vec<_>>()
            .join(" ");
        let a_set = self
            .decomposition
            .a_set
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",");
        format!(
            "word: {}\nsegments: {}\ntrailing_two: {}\nA: {{{}}}\nhat: {}\nbar: {}\n",
            self.word, segments, self.decomposition.trailing_two, a_set, self.hat, self.bar
        )
    }
}

pub fn component_to_json(c: &Component, split: &[Component]) -> serde_json::Value {
    let decomposition = c
        .lowest
        .first()
        .and_then(|l| DecompositionView::compute(l).ok())
        .map(|v| v.to_json_body());
    json!({
        "schema": SCHEMA,
        "kind": "component",
        "n": c.seed.len(),
        "mode": c.mode.to_string(),
        "seed": c.seed.to_string(),
        "members": c.members.iter().map(Word::to_string).collect::<Vec<_>>(),
        "highest": c.highest.iter().map(Word::to_string).collect::<Vec<_>>(),
        "lowest": c.lowest.iter().map(Word::to_string).collect::<Vec<_>>(),
        "gl2_split": split.iter().map(|p| json!({
            "highest": p.highest.iter().map(Word::to_string).collect::<Vec<_>>(),
            "members": p.members.iter().map(Word::to_string).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "decomposition": decomposition,
    })
}

pub fn component_to_text(c: &Component, split: &[Component]) -> String {
    let mut out = format!("# {SCHEMA}\n");
    out.push_str(&format!(
        "seed: {}\nn: {}\nmode: {}\n",
        c.seed,
        c.seed.len(),
        c.mode
    ));
    out.push_str(&format!(
        "members ({}): {}\n",
        c.members.len(),
        join_words(&c.members)
    ));
    out.push_str(&format!("highest: {}\n", join_words(&c.highest)));
    out.push_str(&format!("lowest: {}\n", join_words(&c.lowest)));
    out.push_str("gl2 components:\n");
    for p in split {
        out.push_str(&format!(
            "  highest {}: {}\n",
            join_words(&p.highest),
            join_words(&p.members)
        ));
    }
    if let Some(l) = c.lowest.first() {
        if let Ok(view) = DecompositionView::compute(l) {
            out.push_str(&format!("decomposition of lowest {l}:\n"));
            for line in view.to_text().lines().skip(1) {
                out.push_str(&format!("  {line}\n"));
            }
        }
    }
    out
}

/// The component restricted to its own edges, as a DOT subgraph.
pub fn component_to_dot(c: &Component, ascii: bool) -> String {
    let mut out = String::new();
    out.push_str(&format!("// {SCHEMA}\n"));
    out.push_str("digraph component {\n  rankdir=TB;\n");
    for node in &c.members {
        out.push_str(&format!("  \"{node}\";\n"));
    }
    for node in &c.members {
        for &op in c.mode.lowering_ops() {
            if let Some(dst) = crate::word::apply(op, node) {
                let label = match op {
                    crate::word::CrystalOp::FEven => EdgeLabel::Even,
                    _ => EdgeLabel::Odd,
                };
                let style = match label {
                    EdgeLabel::Even => "",
                    EdgeLabel::Odd => ", style=dashed",
                };
                out.push_str(&format!(
                    "  \"{}\" -> \"{}\" [label=\"{}\"{}];\n",
                    node,
                    dst,
                    dot_label(label, ascii),
                    style
                ));
            }
        }
    }
    out.push_str("}\n");
    out
}

pub fn tensor_to_json(v: &TensorVector) -> serde_json::Value {
    json!({
        "schema": SCHEMA,
        "kind": "tensor_vector",
        "n": v.n(),
        "terms": v.iter().map(|(w, c)| json!({
            "word": w.to_string(),
            "coeff": c,
        })).collect::<Vec<_>>(),
    })
}

pub fn tensor_to_tsv(v: &TensorVector) -> String {
    let mut out = format!("# {SCHEMA}\n");
    for (w, c) in v.iter() {
        out.push_str(&format!("{w}\t{c}\n"));
    }
    out
}

/// Class terms are listed by descending label (ascending flipped word).
pub fn kclass_to_json(c: &KClass, basis: BasisTag) -> serde_json::Value {
    let mut terms: Vec<(&Word, &i64)> = c.iter().collect();
    terms.reverse();
    json!({
        "schema": SCHEMA,
        "kind": "class",
        "n": c.n(),
        "basis": basis.as_str(),
        "terms": terms.iter().map(|(l, coeff)| json!({
            "label": l.to_string(),
            "coeff": coeff,
        })).collect::<Vec<_>>(),
    })
}

pub fn transition_to_text(t: &Transition) -> String {
    let mut out = format!("# {SCHEMA}\n");
    for (a, row) in t.simple_rows() {
        out.push_str(&format!("L({a}) = {}\n", row.display(BasisTag::Verma)));
    }
    for (b, row) in t.verma_rows() {
        out.push_str(&format!("M({b}) = {}\n", row.display(BasisTag::Simple)));
    }
    out
}

pub fn transition_to_tsv(t: &Transition) -> String {
    let mut out = format!("# {SCHEMA}\n");
    for (a, row) in t.simple_rows() {
        let mut terms: Vec<(&Word, &i64)> = row.iter().collect();
        terms.reverse();
        for (b, c) in terms {
            out.push_str(&format!("L({a})\tM({b})\t{c}\n"));
        }
    }
    for (b, row) in t.verma_rows() {
        let mut terms: Vec<(&Word, &i64)> = row.iter().collect();
        terms.reverse();
        for (a, c) in terms {
            out.push_str(&format!("M({b})\tL({a})\t{c}\n"));
        }
    }
    out
}

pub fn transition_to_json(t: &Transition) -> serde_json::Value {
    let rows = |iter: Box<dyn Iterator<Item = (&Word, &KClass)> + '_>| -> Vec<serde_json::Value> {
        iter.map(|(label, row)| {
            let mut terms: Vec<(&Word, &i64)> = row.iter().collect();
            terms.reverse();
            json!({
                "label": label.to_string(),
                "terms": terms.iter().map(|(l, c)| json!({
                    "label": l.to_string(),
                    "coeff": c,
                })).collect::<Vec<_>>(),
            })
        })
        .collect()
    };
    json!({
        "schema": SCHEMA,
        "kind": "transition",
        "n": t.n(),
        "simple_to_verma": rows(Box::new(t.simple_rows())),
        "verma_to_simple": rows(Box::new(t.verma_rows())),
    })
}

pub fn suite_report_to_json(rep: &SuiteReport) -> serde_json::Value {
    let mut value = serde_json::to_value(rep).expect("suite report serializes");
    let obj = value.as_object_mut().expect("object");
    obj.insert("schema".into(), json!(SCHEMA));
    obj.insert("kind".into(), json!("verify"));
    value
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, component_of, gl2_split, Mode, DEFAULT_GRAPH_CAP};

    #[test]
    fn dot_is_deterministic_and_contains_dashed_edge() {
        let g = build_graph(4, Mode::Q2, DEFAULT_GRAPH_CAP).unwrap();
        let a = graph_to_dot(&g, true);
        let b = graph_to_dot(&g, true);
        assert_eq!(a, b);
        assert!(a.contains("\"1111\" -> \"1112\" [label=\"1bar\", style=dashed];"));
        assert!(a.contains("\"1111\" -> \"2111\" [label=\"1\"];"));
        let unicode = graph_to_dot(&g, false);
        assert!(unicode.contains("1\u{0304}"));
    }

    #[test]
    fn graph_json_shape() {
        let g = build_graph(1, Mode::Q2, DEFAULT_GRAPH_CAP).unwrap();
        let v = graph_to_json(&g);
        assert_eq!(v["schema"], "qcrystal/1");
        assert_eq!(v["nodes"], serde_json::json!(["1", "2"]));
        assert_eq!(v["edges"].as_array().unwrap().len(), 2);
        assert_eq!(v["components"].as_array().unwrap().len(), 1);
    }

    #[test]
    fn component_text_includes_decomposition() {
        let c = component_of(&"22122122".parse().unwrap(), Mode::Q2);
        let split = gl2_split(&c);
        let text = component_to_text(&c, &split);
        assert!(text.contains("members (8)"));
        assert!(text.contains("A: {3,4,6,7}"));
        assert!(text.contains("hat: 2222"));
        assert!(text.contains("bar: 1212"));
    }
}
