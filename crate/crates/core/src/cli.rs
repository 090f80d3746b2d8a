//! Report-producing commands behind the `modcomp` binary.
//!
//! Reports carry a header with the tool version, the element-ordering
//! fingerprint and an echo of the configuration. They contain no timestamps,
//! so equal configurations give byte-identical output.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::cayley::{build_graph, graph_fingerprint};
use crate::error::{Error, Result};
use crate::genvec::{GenVector, Signature};
use crate::group::{build_group, GroupSpec, GroupTable, DEFAULT_ORDER_CAP};
use crate::patch::{isometry_matrix, sample_patches, Injectivity, PatchSample, Selection};
use crate::pipeline::Pipeline;
use crate::tiling::{
    crossover_sequence, detect_degeneracies, formula_display, polygon_dot, validate_spoke_cycles, CutId, CutSystem,
};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

pub const DEFAULT_MAX_VECTORS: usize = 5_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Dot,
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s.trim() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "dot" => Ok(Format::Dot),
            "text" => Ok(Format::Text),
            other => Err(Error::Config(format!("unknown format `{other}`"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    /// Preset token or path to a group JSON file.
    pub group: String,
    pub signature: Option<Signature>,
    pub cut: CutId,
    pub selection: Selection,
    pub injectivity: Injectivity,
    pub format: Format,
    pub max_group_order: usize,
    pub max_vectors: usize,
    /// Restricts `tiling` to one class.
    pub class: Option<usize>,
    /// Restricts `matrix` to one modular orbit.
    pub orbit: Option<usize>,
    /// `census` also runs the rows marked slow.
    pub include_slow: bool,
    /// `tiling --format dot` draws the Cayley graph instead of the polygon.
    pub cayley: bool,
    /// With random selection, `matrix` also samples this many seeds per entry.
    pub runs: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            group: "sym3".into(),
            signature: None,
            cut: CutId::E4,
            selection: Selection::CayleyDistance,
            injectivity: Injectivity::Enforced,
            format: Format::Text,
            max_group_order: DEFAULT_ORDER_CAP,
            max_vectors: DEFAULT_MAX_VECTORS,
            class: None,
            orbit: None,
            include_slow: false,
            cayley: false,
            runs: 1,
        }
    }
}

impl RunConfig {
    fn echo(&self) -> Vec<(String, String)> {
        let opt = |o: Option<usize>| o.map_or("all".to_string(), |v| v.to_string());
        vec![
            ("group".into(), self.group.clone()),
            ("signature".into(), self.signature.map_or("-".into(), |s| s.to_string())),
            ("cut".into(), self.cut.to_string()),
            ("selection".into(), self.selection.to_string()),
            ("injectivity".into(), self.injectivity.to_string()),
            ("max_group_order".into(), self.max_group_order.to_string()),
            ("max_vectors".into(), self.max_vectors.to_string()),
            ("class".into(), opt(self.class)),
            ("orbit".into(), opt(self.orbit)),
            ("include_slow".into(), self.include_slow.to_string()),
            ("runs".into(), self.runs.to_string()),
        ]
    }

    fn signature(&self) -> Result<Signature> {
        self.signature
            .ok_or_else(|| Error::Config("--signature is required".into()))
    }

    fn build_group(&self) -> Result<GroupTable> {
        build_group(&GroupSpec::from_token(&self.group)?, self.max_group_order)
    }

    fn pipeline(&self) -> Result<Pipeline> {
        let p = Pipeline::new(self.build_group()?, self.signature()?);
        if p.vectors.len() > self.max_vectors {
            return Err(Error::Config(format!(
                "{} vectors exceed the limit of {}",
                p.vectors.len(),
                self.max_vectors
            )));
        }
        Ok(p)
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub ordering: Option<String>,
    pub config: Vec<(String, String)>,
    pub body: Value,
    text: String,
    csv: Option<String>,
    dot: Option<String>,
}

impl Report {
    fn header_lines(&self) -> Vec<String> {
        let mut lines = vec![format!("modcomp {TOOL_VERSION} {}", self.command)];
        if let Some(o) = &self.ordering {
            lines.push(format!("ordering {o}"));
        }
        for (k, v) in &self.config {
            lines.push(format!("{k}={v}"));
        }
        lines
    }

    pub fn render(&self, format: Format) -> Result<String> {
        let comment = |prefix: &str| {
            self.header_lines()
                .iter()
                .map(|l| format!("{prefix}{l}\n"))
                .collect::<String>()
        };
        match format {
            Format::Json => {
                let config: serde_json::Map<String, Value> = self
                    .config
                    .iter()
                    .map(|(k, v)| (k.clone(), Value::String(v.clone())))
                    .collect();
                let doc = json!({
                    "header": {
                        "tool": "modcomp",
                        "version": TOOL_VERSION,
                        "command": self.command,
                        "ordering": self.ordering,
                        "config": config,
                    },
                    "report": self.body,
                });
                Ok(serde_json::to_string_pretty(&doc)? + "\n")
            }
            Format::Text => Ok(comment("# ") + &self.text),
            Format::Csv => self
                .csv
                .as_ref()
                .map(|c| comment("# ") + c)
                .ok_or_else(|| Error::Config(format!("{} has no csv output", self.command))),
            Format::Dot => self
                .dot
                .as_ref()
                .map(|d| comment("// ") + d)
                .ok_or_else(|| Error::Config(format!("{} has no dot output", self.command))),
        }
    }
}

fn ids(v: &GenVector) -> String {
    v.ids().iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
}

fn section(text: &mut String, title: &str) {
    let _ = writeln!(text, "== {title} ==");
}

pub fn cmd_vectors(cfg: &RunConfig) -> Result<Report> {
    let p = cfg.pipeline()?;
    let g = &p.group;
    let genus = p.genus();
    let mut text = String::new();
    section(&mut text, "group");
    let _ = writeln!(
        text,
        "{} order {}, {} automorphisms",
        g.name(),
        g.order(),
        p.automorphisms.len()
    );
    section(&mut text, "signature");
    let _ = writeln!(
        text,
        "{} genus {}",
        p.signature,
        genus.map_or("n/a".into(), |s| s.to_string())
    );
    section(&mut text, "vectors");
    let _ = writeln!(text, "{} vectors, {} classes", p.vectors.len(), p.classes.len());
    section(&mut text, "classes");
    let mut csv = String::from("class,c1,c2,c3,c4,orbit_size\n");
    for c in &p.classes {
        let _ = writeln!(
            text,
            "{:>4}  {}  [{}]  orbit {}",
            c.index,
            c.representative.display(g),
            ids(&c.representative),
            c.orbit_size
        );
        let r = c.representative.ids();
        let _ = writeln!(csv, "{},{},{},{},{},{}", c.index, r[0], r[1], r[2], r[3], c.orbit_size);
    }
    let body = json!({
        "group": g.name(),
        "order": g.order(),
        "automorphisms": p.automorphisms.len(),
        "signature": p.signature.to_string(),
        "genus": genus,
        "vector_count": p.vectors.len(),
        "class_count": p.classes.len(),
        "classes": p.classes.iter().map(|c| json!({
            "index": c.index,
            "representative": c.representative.ids(),
            "words": c.representative.0.map(|e| g.display(e)),
            "orbit_size": c.orbit_size,
        })).collect::<Vec<_>>(),
    });
    Ok(Report {
        command: "vectors".into(),
        ordering: Some(g.ordering_fingerprint()),
        config: cfg.echo(),
        body,
        text,
        csv: Some(csv),
        dot: None,
    })
}

pub fn cmd_strata(cfg: &RunConfig) -> Result<Report> {
    let p = cfg.pipeline()?;
    let g = &p.group;
    let st = p.strata()?;
    let mut text = String::new();
    section(&mut text, "classes");
    let _ = writeln!(text, "{} classes", p.classes.len());
    section(&mut text, "generators");
    let _ = writeln!(
        text,
        "{}",
        st.generator_set
            .iter()
            .map(|m| m.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    );
    section(&mut text, "orbits");
    let _ = writeln!(text, "{}", st.sizes_display());
    let mut csv = String::from("orbit,size,classes\n");
    for (k, orbit) in st.orbits.iter().enumerate() {
        let _ = writeln!(text, "orbit {k} size {}", orbit.len());
        for &i in orbit {
            let r = &p.classes[i].representative;
            let _ = writeln!(text, "  {:>4}  {}  [{}]", i, r.display(g), ids(r));
        }
        let members = orbit.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ");
        let _ = writeln!(csv, "{k},{},{members}", orbit.len());
    }
    let body = json!({
        "group": g.name(),
        "signature": p.signature.to_string(),
        "class_count": p.classes.len(),
        "orbit_sizes": st.sizes(),
        "generators": st.generator_set.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
        "orbits": st.orbits.iter().map(|o| json!({
            "size": o.len(),
            "classes": o,
            "representatives": o.iter().map(|&i| p.classes[i].representative.ids()).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    });
    Ok(Report {
        command: "strata".into(),
        ordering: Some(g.ordering_fingerprint()),
        config: cfg.echo(),
        body,
        text,
        csv: Some(csv),
        dot: None,
    })
}

pub fn cmd_tiling(cfg: &RunConfig) -> Result<Report> {
    let p = cfg.pipeline()?;
    let g = &p.group;
    let cut = CutSystem::preset(cfg.cut);
    let selected: Vec<usize> = match cfg.class {
        Some(i) if i < p.classes.len() => vec![i],
        Some(i) => return Err(Error::Config(format!("class {i} does not exist"))),
        None => (0..p.classes.len()).collect(),
    };
    let mut text = String::new();
    section(&mut text, "cut system");
    let _ = writeln!(
        text,
        "{} edges {}",
        cut.id,
        cut.undirected_edges
            .iter()
            .map(|(a, b)| format!("{{{a},{b}}}"))
            .collect::<Vec<_>>()
            .join(" ")
    );
    for q in 0..cut.len() {
        let _ = writeln!(text, "  {}  {}", cut.boundary[q], formula_display(&cut, q));
    }
    let mut csv = String::from("class,position,edge,tau_id,tau_word\n");
    let mut entries = Vec::new();
    for &i in &selected {
        let v = &p.classes[i].representative;
        let seq = crossover_sequence(g, &cut, v);
        let rep = detect_degeneracies(g, &cut, &seq);
        let spokes_ok = validate_spoke_cycles(g, &cut, &seq);
        section(&mut text, &format!("class {i}"));
        let _ = writeln!(text, "vector {}", v.display(g));
        let _ = writeln!(
            text,
            "taus ({})",
            seq.taus.iter().map(|&t| g.display(t)).collect::<Vec<_>>().join(", ")
        );
        let pos_list = |ps: &[usize]| {
            ps.iter()
                .map(|&q| cut.boundary[q].to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        let _ = writeln!(
            text,
            "edge collapse: {}",
            if rep.has_edge_collapse() {
                pos_list(&rep.collapsed_edges)
            } else {
                "none".into()
            }
        );
        let _ = writeln!(
            text,
            "multi-edges: {} shape {:?}",
            rep.multi_edge_groups
                .iter()
                .map(|c| format!("[{}]", pos_list(c)))
                .collect::<Vec<_>>()
                .join(" "),
            rep.multi_edge_shape
        );
        let collapsed: Vec<String> = rep
            .vertex_collapses
            .iter()
            .filter(|v| v.collapsed)
            .map(|v| v.vertex.to_string())
            .collect();
        let _ = writeln!(
            text,
            "vertex collapse: {}",
            if collapsed.is_empty() {
                "none".into()
            } else {
                collapsed.join(" ")
            }
        );
        let _ = writeln!(text, "spoke cycles: {}", if spokes_ok { "ok" } else { "FAILED" });
        for (q, &t) in seq.taus.iter().enumerate() {
            let _ = writeln!(csv, "{i},{q},{},{},{}", cut.boundary[q], t.0, g.display(t));
        }
        let fingerprint = build_graph(g, &cut, &seq).ok().map(|gr| graph_fingerprint(&gr));
        entries.push(json!({
            "class": i,
            "vector": v.ids(),
            "taus": seq.taus.iter().map(|t| t.0).collect::<Vec<_>>(),
            "tau_words": seq.taus.iter().map(|&t| g.display(t)).collect::<Vec<_>>(),
            "degeneracies": rep,
            "spoke_cycles_valid": spokes_ok,
            "graph_fingerprint": fingerprint,
        }));
    }
    let first = selected.first().copied();
    let dot = match first {
        Some(i) => {
            let seq = crossover_sequence(g, &cut, &p.classes[i].representative);
            if cfg.cayley {
                build_graph(g, &cut, &seq).ok().map(|gr| gr.to_dot(g))
            } else {
                Some(polygon_dot(g, &cut, &seq))
            }
        }
        None => None,
    };
    let body = json!({
        "group": g.name(),
        "signature": p.signature.to_string(),
        "cut": cut.id.to_string(),
        "boundary": cut.boundary.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
        "classes": entries,
    });
    Ok(Report {
        command: "tiling".into(),
        ordering: Some(g.ordering_fingerprint()),
        config: cfg.echo(),
        body,
        text,
        csv: Some(csv),
        dot,
    })
}

pub fn cmd_matrix(cfg: &RunConfig) -> Result<Report> {
    let p = cfg.pipeline()?;
    let g = &p.group;
    let cut = CutSystem::preset(cfg.cut);
    let members: Vec<usize> = match cfg.orbit {
        None => (0..p.classes.len()).collect(),
        Some(k) => p
            .strata()?
            .orbits
            .get(k)
            .cloned()
            .ok_or_else(|| Error::Config(format!("orbit {k} does not exist")))?,
    };
    let reps: Vec<GenVector> = members.iter().map(|&i| p.classes[i].representative).collect();
    let m = isometry_matrix(g, &cut, &reps, cfg.selection, cfg.injectivity)?;
    let cell = |e: Option<usize>| e.map_or("-".to_string(), |v| v.to_string());
    let mut text = String::new();
    section(&mut text, "classes");
    for (&i, r) in members.iter().zip(&reps) {
        let _ = writeln!(text, "{:>4}  {}  [{}]", i, r.display(g), ids(r));
    }
    section(&mut text, "matrix");
    let _ = writeln!(
        text,
        "     {}",
        members
            .iter()
            .map(|i| format!("{:>5}", format!("c{i}")))
            .collect::<String>()
    );
    let mut csv = format!(
        "class,{}\n",
        members.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
    );
    for (row, &i) in m.entries.iter().zip(&members) {
        let _ = writeln!(
            text,
            "{:>5}{}",
            format!("c{i}"),
            row.iter().map(|&e| format!("{:>5}", cell(e))).collect::<String>()
        );
        let _ = writeln!(
            csv,
            "{i},{}",
            row.iter().map(|&e| cell(e)).collect::<Vec<_>>().join(",")
        );
    }
    let flagged: Vec<usize> = members
        .iter()
        .zip(&m.collapsed)
        .filter(|(_, &c)| c)
        .map(|(&i, _)| i)
        .collect();
    if !flagged.is_empty() {
        let _ = writeln!(
            text,
            "edge collapse under {} for classes {:?}; their rows and columns are empty",
            cut.id, flagged
        );
    }
    let mut samples: Option<Vec<Vec<Option<PatchSample>>>> = None;
    if let (Selection::Random { seed }, true) = (cfg.selection, cfg.runs > 1) {
        let seqs: Vec<_> = reps.iter().map(|v| crossover_sequence(g, &cut, v)).collect();
        let mut rows = Vec::new();
        section(
            &mut text,
            &format!("random patch sizes over {} seeds from {seed}", cfg.runs),
        );
        for (i, row) in m.entries.iter().enumerate() {
            let mut out = Vec::new();
            let mut line = format!("{:>5}", format!("c{}", members[i]));
            for (j, e) in row.iter().enumerate() {
                let sample = match e {
                    Some(_) => Some(sample_patches(
                        g,
                        &cut,
                        &seqs[i],
                        &seqs[j],
                        cfg.injectivity,
                        seed,
                        cfg.runs,
                    )?),
                    None => None,
                };
                let _ = write!(
                    line,
                    " {:>14}",
                    sample
                        .as_ref()
                        .map_or("-".into(), |s| format!("{}..{} ~{:.1}", s.min, s.max, s.mean))
                );
                out.push(sample);
            }
            let _ = writeln!(text, "{line}");
            rows.push(out);
        }
        samples = Some(rows);
    }
    let summary = samples.as_ref().map(|rows| {
        rows.iter()
            .map(|r| {
                r.iter()
                    .map(|s| s.as_ref().map(|s| json!({"min": s.min, "max": s.max, "mean": s.mean})))
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
    });
    let body = json!({
        "group": g.name(),
        "order": g.order(),
        "signature": p.signature.to_string(),
        "cut": cut.id.to_string(),
        "selection": cfg.selection.to_string(),
        "injectivity": cfg.injectivity.to_string(),
        "classes": members,
        "entries": m.entries,
        "collapsed_classes": flagged,
        "samples": summary,
    });
    Ok(Report {
        command: "matrix".into(),
        ordering: Some(g.ordering_fingerprint()),
        config: cfg.echo(),
        body,
        text,
        csv: Some(csv),
        dot: None,
    })
}

/// One census row: preset token, signature, and whether it is slow.
pub const CENSUS_ROWS: &[(&str, &str, bool)] = &[
    ("sym3", "2,2,3,3", false),
    ("cyclic:13", "13,13,13,13", false),
    ("sg21_1", "3,3,7,7", false),
    ("alt5", "2,2,2,3", false),
    ("alt5", "2,3,3,5", false),
    ("alt5", "5,5,5,5", false),
    ("psl2_7", "2,2,3,3", true),
    ("psl2_7", "7,7,7,7", true),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub group: String,
    pub order: usize,
    pub signature: String,
    pub genus: Option<u64>,
    pub vectors: usize,
    pub classes: usize,
    pub orbit_sizes: Vec<usize>,
    pub ordering: String,
}

pub fn census_row(preset: &str, signature: &str, cap: usize) -> Result<CensusRow> {
    let g = build_group(&GroupSpec::Preset { preset: preset.into() }, cap)?;
    let p = Pipeline::new(g, signature.parse()?);
    let st = p.strata()?;
    Ok(CensusRow {
        group: p.group.name().to_string(),
        order: p.group.order(),
        signature: p.signature.to_string(),
        genus: p.genus(),
        vectors: p.vectors.len(),
        classes: p.classes.len(),
        orbit_sizes: st.sizes(),
        ordering: p.group.ordering_fingerprint(),
    })
}

pub fn cmd_census(cfg: &RunConfig) -> Result<Report> {
    let rows: Vec<CensusRow> = CENSUS_ROWS
        .iter()
        .filter(|r| cfg.include_slow || !r.2)
        .map(|&(preset, sig, _)| census_row(preset, sig, cfg.max_group_order))
        .collect::<Result<_>>()?;
    let mut text = String::new();
    section(&mut text, "census");
    let _ = writeln!(
        text,
        "{:<10} {:>5}  {:<16} {:>6} {:>8} {:>7}  orbits",
        "group", "|G|", "signature", "genus", "vectors", "classes"
    );
    let mut csv = String::from("group,order,signature,genus,vectors,classes,orbits\n");
    for r in &rows {
        let orbits = format!(
            "({})",
            r.orbit_sizes
                .iter()
                .map(|n| n.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        );
        let genus = r.genus.map_or("n/a".into(), |s| s.to_string());
        let _ = writeln!(
            text,
            "{:<10} {:>5}  {:<16} {:>6} {:>8} {:>7}  {}",
            r.group, r.order, r.signature, genus, r.vectors, r.classes, orbits
        );
        let _ = writeln!(
            csv,
            "{},{},\"{}\",{},{},{},\"{}\"",
            r.group, r.order, r.signature, genus, r.vectors, r.classes, orbits
        );
    }
    if !cfg.include_slow {
        let _ = writeln!(text, "rows marked slow were skipped; pass --include-slow to run them");
    }
    Ok(Report {
        command: "census".into(),
        ordering: None,
        config: cfg.echo(),
        body: json!({ "rows": rows }),
        text,
        csv: Some(csv),
        dot: None,
    })
}
