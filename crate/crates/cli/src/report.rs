//! Serializable documents for reports. Every integer is a decimal string so
//! nothing is truncated to 64 bits on the way through JSON.

use std::fmt::Write as _;

use monogen_core::algebra::{BinaryForm, Triple};
use monogen_core::monogenize::{
    BranchReport, OracleComparison, PipelineConfig, PipelineReport, CUBIC_CLASS_MAX,
    QUARTIC_CLASS_MAX, TOTAL_CLASS_MAX,
};
use monogen_core::thue::{Pair, SolutionSet};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

fn s(n: &BigInt) -> String {
    n.to_string()
}

fn strs<'a>(ns: impl IntoIterator<Item = &'a BigInt>) -> Vec<String> {
    ns.into_iter().map(s).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffsDoc {
    pub coeffs: Vec<String>,
}

impl CoeffsDoc {
    fn of(f: &BinaryForm) -> Self {
        CoeffsDoc { coeffs: strs(f.coeffs()) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolventDoc {
    pub coeffs: Vec<String>,
    pub disc: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairDoc {
    pub u: String,
    pub v: String,
}

impl PairDoc {
    fn of((u, v): &Pair) -> Self {
        PairDoc { u: s(u), v: s(v) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleDoc {
    pub x: String,
    pub y: String,
    pub z: String,
}

impl TripleDoc {
    fn of(t: &Triple) -> Self {
        TripleDoc { x: s(&t[0]), y: s(&t[1]), z: s(&t[2]) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuarticSolutionDoc {
    pub p: String,
    pub q: String,
    pub rhs: String,
    pub lifted: Option<TripleDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedTripleDoc {
    pub x: String,
    pub y: String,
    pub z: String,
    pub verified: bool,
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchDoc {
    pub u: String,
    pub v: String,
    pub bezout: Vec<String>,
    pub conic: CoeffsDoc,
    pub conic_point: Option<TripleDoc>,
    pub quartic: Option<CoeffsDoc>,
    pub multiplier: Option<String>,
    pub rhs_values: Vec<String>,
    pub quartic_solutions: Vec<QuarticSolutionDoc>,
    pub potentially_infinite: bool,
    pub triples: Vec<DerivedTripleDoc>,
    pub fallback_used: bool,
    pub literal_quartic: Option<CoeffsDoc>,
    pub discrepancies: Vec<String>,
}

impl BranchDoc {
    fn of(b: &BranchReport) -> Self {
        BranchDoc {
            u: s(&b.source.0),
            v: s(&b.source.1),
            bezout: strs(b.bezout.entries()),
            conic: CoeffsDoc { coeffs: strs(b.conic.coeffs()) },
            conic_point: b.conic_point.as_ref().map(TripleDoc::of),
            quartic: b.quartic.as_ref().map(CoeffsDoc::of),
            multiplier: b.parametrization.as_ref().map(|p| s(&p.multiplier)),
            rhs_values: strs(&b.rhs),
            quartic_solutions: b
                .quartic_solutions
                .iter()
                .map(|q| QuarticSolutionDoc {
                    p: s(&q.p),
                    q: s(&q.q),
                    rhs: s(&q.value),
                    lifted: q.lifted.as_ref().map(TripleDoc::of),
                })
                .collect(),
            potentially_infinite: b.potentially_infinite,
            triples: b
                .triples
                .iter()
                .map(|d| DerivedTripleDoc {
                    x: s(&d.triple[0]),
                    y: s(&d.triple[1]),
                    z: s(&d.triple[2]),
                    verified: d.verified,
                    provenance: d.provenance.to_string(),
                })
                .collect(),
            fallback_used: b.fallback_used,
            literal_quartic: b.literal_quartic.as_ref().map(CoeffsDoc::of),
            discrepancies: b.discrepancies.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDoc {
    pub x: String,
    pub y: String,
    pub z: String,
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountsDoc {
    pub cubic: String,
    pub branches: String,
    pub quartic_forms: String,
    pub per_branch: Vec<String>,
    pub total: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionalDoc {
    pub description: String,
    pub bound: String,
    pub observed: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsDoc {
    pub cubic_max: String,
    pub quartic_max: String,
    pub total_max: String,
    pub pass: bool,
    pub discriminant_sign: String,
    pub conditional: Vec<ConditionalDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleDoc {
    pub bound: String,
    pub oracle_classes: Vec<TripleDoc>,
    pub missing_from_pipeline: Vec<TripleDoc>,
    pub missing_from_oracle: Vec<TripleDoc>,
    pub outside_box: Vec<TripleDoc>,
    pub agrees: bool,
}

impl OracleDoc {
    pub fn of(c: &OracleComparison) -> Self {
        let list = |ts: &[Triple]| ts.iter().map(TripleDoc::of).collect();
        OracleDoc {
            bound: c.bound.to_string(),
            oracle_classes: list(&c.oracle_classes),
            missing_from_pipeline: list(&c.missing_from_pipeline),
            missing_from_oracle: list(&c.missing_from_oracle),
            outside_box: list(&c.outside_box),
            agrees: c.agrees(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigDoc {
    pub cubic_height: String,
    pub quartic_height: String,
    pub conic_point_bound: String,
    pub fallback_box: String,
    pub cross_validate: bool,
    pub literal_comparison: bool,
    pub oracle_box: Option<String>,
}

impl ConfigDoc {
    fn of(c: &PipelineConfig) -> Self {
        ConfigDoc {
            cubic_height: c.cubic_height.to_string(),
            quartic_height: c.quartic_height.to_string(),
            conic_point_bound: c.conic_point_bound.to_string(),
            fallback_box: c.fallback_box.to_string(),
            cross_validate: c.cross_validate,
            literal_comparison: c.literal_comparison,
            oracle_box: c.oracle_box.map(|b| b.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub generator: CoeffsDoc,
    pub discriminant: String,
    pub resolvent: ResolventDoc,
    pub cubic_solutions: Vec<PairDoc>,
    pub cubic_potentially_infinite: bool,
    pub branches: Vec<BranchDoc>,
    pub classes: Vec<ClassDoc>,
    pub counts: CountsDoc,
    pub bounds: BoundsDoc,
    pub oracle: Option<OracleDoc>,
    pub config: ConfigDoc,
    pub scope: String,
}

impl ReportDoc {
    pub fn of(r: &PipelineReport) -> Self {
        let d = &r.diagnostics;
        ReportDoc {
            generator: CoeffsDoc { coeffs: strs(r.generator.coeffs()) },
            discriminant: s(&r.discriminant),
            resolvent: ResolventDoc {
                coeffs: strs(r.resolvent.coeffs()),
                disc: s(&r.resolvent_discriminant),
            },
            cubic_solutions: r.cubic.solutions.iter().map(PairDoc::of).collect(),
            cubic_potentially_infinite: r.cubic.potentially_infinite,
            branches: r.branches.iter().map(BranchDoc::of).collect(),
            classes: r
                .classes
                .iter()
                .map(|c| ClassDoc {
                    x: s(&c.triple[0]),
                    y: s(&c.triple[1]),
                    z: s(&c.triple[2]),
                    provenance: c.provenance.to_string(),
                })
                .collect(),
            counts: CountsDoc {
                cubic: r.counts.cubic.to_string(),
                branches: r.counts.branches.to_string(),
                quartic_forms: r.counts.quartic_forms.to_string(),
                per_branch: r.counts.per_branch.iter().map(|n| n.to_string()).collect(),
                total: r.counts.total.to_string(),
            },
            bounds: BoundsDoc {
                cubic_max: CUBIC_CLASS_MAX.to_string(),
                quartic_max: QUARTIC_CLASS_MAX.to_string(),
                total_max: TOTAL_CLASS_MAX.to_string(),
                pass: d.pass(),
                discriminant_sign: d.discriminant_sign.to_string(),
                conditional: d
                    .conditional
                    .iter()
                    .map(|(desc, b, o)| ConditionalDoc {
                        description: desc.clone(),
                        bound: b.to_string(),
                        observed: o.to_string(),
                    })
                    .collect(),
            },
            oracle: r.oracle.as_ref().map(OracleDoc::of),
            config: ConfigDoc::of(&r.config),
            scope: scope_note(r.config.cubic_height, r.config.quartic_height),
        }
    }
}

pub fn scope_note(cubic: u64, quartic: u64) -> String {
    format!(
        "bounded search: cubic solutions with |v| <= {cubic}, quartic solutions with |q| <= {quartic}; not a proof of completeness"
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThueDoc {
    pub form: Vec<String>,
    pub rhs: Vec<String>,
    pub height: String,
    pub solutions: Vec<PairDoc>,
    pub complete_within_height: bool,
    pub potentially_infinite: bool,
    pub scope: String,
}

impl ThueDoc {
    pub fn of(form: &BinaryForm, set: &SolutionSet) -> Self {
        ThueDoc {
            form: strs(form.coeffs()),
            rhs: strs(&set.rhs),
            height: set.height.to_string(),
            solutions: set.solutions.iter().map(PairDoc::of).collect(),
            complete_within_height: set.complete_within_height,
            potentially_infinite: set.potentially_infinite,
            scope: format!("solutions with |v| <= {}", set.height),
        }
    }
}

/// `path,value` rows for every scalar leaf of a JSON document.
pub fn to_csv<T: Serialize>(doc: &T) -> String {
    let value = serde_json::to_value(doc).expect("documents serialize");
    let mut rows = Vec::new();
    flatten(&value, String::new(), &mut rows);
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["path", "value"]).unwrap();
    for (path, v) in rows {
        w.write_record([path, v]).unwrap();
    }
    String::from_utf8(w.into_inner().unwrap()).unwrap()
}

fn flatten(v: &serde_json::Value, path: String, out: &mut Vec<(String, String)>) {
    use serde_json::Value;
    let join = |k: &str| if path.is_empty() { k.to_string() } else { format!("{path}.{k}") };
    match v {
        Value::Object(m) => m.iter().for_each(|(k, x)| flatten(x, join(k), out)),
        Value::Array(a) => a.iter().enumerate().for_each(|(i, x)| flatten(x, join(&i.to_string()), out)),
        Value::Null => {}
        Value::String(x) => out.push((path, x.clone())),
        other => out.push((path, other.to_string())),
    }
}

fn triple_str(t: &TripleDoc) -> String {
    format!("({}, {}, {})", t.x, t.y, t.z)
}

pub fn report_text(r: &PipelineReport) -> String {
    let doc = ReportDoc::of(r);
    let mut o = String::new();
    let _ = writeln!(o, "generator      {}", r.generator);
    let _ = writeln!(o, "discriminant   {}", r.discriminant);
    let _ = writeln!(o, "resolvent      {}  (disc {})", r.resolvent, r.resolvent_discriminant);
    let _ = writeln!(o, "scope          {}", doc.scope);
    let cubic: Vec<String> = doc.cubic_solutions.iter().map(|p| format!("({}, {})", p.u, p.v)).collect();
    let _ = writeln!(o, "cubic classes  {}", cubic.join(" "));
    for b in &r.branches {
        let _ = writeln!(o, "branch ({}, {})", b.source.0, b.source.1);
        let _ = writeln!(o, "  bezout       {}", b.bezout);
        let _ = writeln!(o, "  conic        {} = 0", b.conic);
        match &b.quartic {
            Some(q) => {
                let _ = writeln!(o, "  quartic      {q}");
                let rhs: Vec<String> = b.rhs.iter().map(|x| x.to_string()).collect();
                let _ = writeln!(o, "  rhs          {}", rhs.join(" "));
            }
            None => {
                let _ = writeln!(o, "  quartic      none (no conic point found)");
            }
        }
        if b.fallback_used {
            let _ = writeln!(o, "  fallback     direct system search used");
        }
        for t in &b.triples {
            let mark = if t.verified { "ok" } else { "FAILED" };
            let _ = writeln!(
                o,
                "  triple       ({}, {}, {})  {mark}  {}",
                t.triple[0], t.triple[1], t.triple[2], t.provenance
            );
        }
        for d in &b.discrepancies {
            let _ = writeln!(o, "  discrepancy  {d}");
        }
    }
    let _ = writeln!(o, "classes ({})", r.classes.len());
    for c in &doc.classes {
        let _ = writeln!(o, "  ({}, {}, {})  {}", c.x, c.y, c.z, c.provenance);
    }
    let _ = writeln!(
        o,
        "bounds         cubic {}/{}  quartic {}/{}  total {}/{}  {}",
        r.diagnostics.cubic_classes,
        CUBIC_CLASS_MAX,
        r.diagnostics.max_quartic_classes,
        QUARTIC_CLASS_MAX,
        r.diagnostics.total_classes,
        TOTAL_CLASS_MAX,
        if r.diagnostics.pass() { "pass" } else { "FAIL" }
    );
    if let Some(c) = &doc.oracle {
        o.push_str(&oracle_text(c));
    }
    o
}

pub fn oracle_text(c: &OracleDoc) -> String {
    let mut o = String::new();
    let list = |ts: &[TripleDoc]| {
        if ts.is_empty() {
            "none".to_string()
        } else {
            ts.iter().map(triple_str).collect::<Vec<_>>().join(" ")
        }
    };
    let _ = writeln!(o, "oracle box     |x|, |y|, |z| <= {}", c.bound);
    let _ = writeln!(o, "  oracle classes          {}", list(&c.oracle_classes));
    let _ = writeln!(o, "  missing from pipeline   {}", list(&c.missing_from_pipeline));
    let _ = writeln!(o, "  missing from oracle     {}", list(&c.missing_from_oracle));
    let _ = writeln!(o, "  outside the box         {}", list(&c.outside_box));
    let _ = writeln!(o, "  {}", if c.agrees { "agree" } else { "DIFFER" });
    o
}

pub fn thue_text(doc: &ThueDoc) -> String {
    let mut o = String::new();
    let _ = writeln!(o, "form      [{}]", doc.form.join(", "));
    let _ = writeln!(o, "rhs       {}", doc.rhs.join(" "));
    let _ = writeln!(o, "scope     {}", doc.scope);
    if doc.potentially_infinite {
        let _ = writeln!(o, "warning   potentially infinite family; listing is a truncation");
    }
    for p in &doc.solutions {
        let _ = writeln!(o, "({}, {})", p.u, p.v);
    }
    o
}

#[cfg(test)]
mod tests {
    use super::*;
    use monogen_core::{enumerate_monogenizations, QuarticGenerator};

    fn small_report() -> PipelineReport {
        let p = QuarticGenerator::from_i64([0, 0, -1, -1]).unwrap();
        let cfg = PipelineConfig { cubic_height: 200, quartic_height: 50, ..Default::default() };
        enumerate_monogenizations(&p, &cfg)
    }

    #[test]
    fn json_round_trip() {
        let doc = ReportDoc::of(&small_report());
        let text = serde_json::to_string_pretty(&doc).unwrap();
        let back: ReportDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(doc.discriminant, "-283");
        assert_eq!(doc.resolvent.coeffs, vec!["1", "0", "4", "-1"]);
    }

    #[test]
    fn csv_has_the_json_leaves() {
        let doc = ReportDoc::of(&small_report());
        let csv = to_csv(&doc);
        assert!(csv.starts_with("path,value\n"));
        assert!(csv.contains("\ndiscriminant,-283\n"));
        assert!(csv.contains("\nresolvent.coeffs.2,4\n"));
        assert!(csv.contains("\nbounds.total_max,2760\n"));
    }

    #[test]
    fn text_mentions_the_box() {
        let t = report_text(&small_report());
        assert!(t.contains("|v| <= 200"));
        assert!(t.contains("classes (13)"));
    }
}
