//! Serializable reports and their plain-text rendering.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "snake_case")]
pub enum Report {
    Betti(BettiReport),
    Ring(RingReport),
    Cap(CapReport),
    Manifold(ManifoldReport),
    Kj(KjReport),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Group {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl Group {
    fn text(&self) -> String {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeGroup {
    pub degree: i32,
    pub group: Group,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandRow {
    pub omega: Vec<usize>,
    /// Degree in the moment-angle complex, one above the simplicial degree.
    pub degree: i32,
    pub group: Group,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiReport {
    pub j: Vec<usize>,
    /// Vertex count of `K(J)`.
    pub m: usize,
    pub betti: Vec<usize>,
    pub homology: Vec<DegreeGroup>,
    pub summands: Vec<SummandRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorRow {
    pub index: usize,
    pub omega: Vec<usize>,
    pub degree: usize,
    pub simplicial_degree: i32,
    pub order: Option<u64>,
    pub cocycle: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coefficient {
    pub generator: usize,
    pub coefficient: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductRow {
    pub factors: Vec<usize>,
    pub product: String,
    pub class: Vec<Coefficient>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingReport {
    pub j: Vec<usize>,
    pub generators: Vec<GeneratorRow>,
    pub pairs: Vec<ProductRow>,
    pub triples: Vec<ProductRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRow {
    pub omega: Vec<usize>,
    pub torsion: Vec<i64>,
    pub free: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub chain: String,
    pub homologous: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CapReport {
    pub j: Vec<usize>,
    pub cochain: String,
    pub chain: String,
    pub result: String,
    pub cochain_is_cocycle: bool,
    pub chain_is_cycle: bool,
    /// The class of the result when both inputs are closed.
    pub class: Option<Vec<ClassRow>>,
    pub comparison: Option<Comparison>,
    /// Whether `∂(a⌢z) = (-1)^{p+r} δa⌢z + a⌢∂z` held for these inputs.
    pub boundary_identity: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRow {
    pub simplex: Vec<usize>,
    pub expected_sphere_dim: isize,
    pub link_homology: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifoldReport {
    pub j: Vec<usize>,
    pub is_homology_manifold: bool,
    pub dimension: isize,
    pub is_generalized_homology_sphere_input: bool,
    pub h1_of_k: String,
    pub topological_manifold_status: String,
    pub witnesses: Vec<WitnessRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockRow {
    pub vertex: usize,
    pub labels: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KjReport {
    pub j: Vec<usize>,
    pub m: usize,
    pub blocks: Vec<BlockRow>,
    pub facets: Vec<Vec<usize>>,
    pub file: String,
}

fn set(labels: &[usize]) -> String {
    let inner: Vec<String> = labels.iter().map(ToString::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

fn join(v: &[usize]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn expansion(class: &[Coefficient]) -> String {
    if class.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (n, c) in class.iter().enumerate() {
        let mag = c.coefficient.unsigned_abs();
        match (n, c.coefficient < 0) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        if mag != 1 {
            let _ = write!(out, "{mag} ");
        }
        let _ = write!(out, "x{}", c.generator);
    }
    out
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut o = String::new();
        match self {
            Report::Betti(r) => {
                let _ = writeln!(o, "b = {}", join(&r.betti));
                let _ = writeln!(o, "J = {}, {} vertices in K(J)", join(&r.j), r.m);
                for d in &r.homology {
                    let _ = writeln!(o, "H_{} = {}", d.degree, d.group.text());
                }
                let _ = writeln!(o, "omega\tdegree\tgroup");
                for s in &r.summands {
                    let _ = writeln!(o, "{}\t{}\t{}", set(&s.omega), s.degree, s.group.text());
                }
            }
            Report::Ring(r) => {
                let _ = writeln!(o, "J = {}, {} generators", join(&r.j), r.generators.len());
                for g in &r.generators {
                    let order = g.order.map_or(String::new(), |n| format!(" order {n}"));
                    let _ = writeln!(
                        o,
                        "x{} deg {} omega {} from H~^{}{}: {}",
                        g.index,
                        g.degree,
                        set(&g.omega),
                        g.simplicial_degree,
                        order,
                        g.cocycle
                    );
                }
                let _ = writeln!(o, "products");
                for p in &r.pairs {
                    let _ = writeln!(o, "x{} * x{} = {}", p.factors[0], p.factors[1], expansion(&p.class));
                }
                if !r.triples.is_empty() {
                    let _ = writeln!(o, "triple products");
                }
                for p in &r.triples {
                    let _ = writeln!(
                        o,
                        "x{} * x{} * x{} = {} [{}]",
                        p.factors[0],
                        p.factors[1],
                        p.factors[2],
                        expansion(&p.class),
                        p.product
                    );
                }
            }
            Report::Cap(r) => {
                let _ = writeln!(o, "{} ^ {} =", r.cochain, r.chain);
                let _ = writeln!(o, "  {}", r.result);
                let _ = writeln!(o, "cocycle: {}, cycle: {}", r.cochain_is_cocycle, r.chain_is_cycle);
                if let Some(class) = &r.class {
                    if class.is_empty() {
                        let _ = writeln!(o, "class: 0");
                    }
                    for c in class {
                        let _ = writeln!(
                            o,
                            "class on {}: free ({}) torsion ({})",
                            set(&c.omega),
                            c.free.iter().map(ToString::to_string).collect::<Vec<_>>().join(","),
                            c.torsion.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
                        );
                    }
                }
                if let Some(c) = &r.comparison {
                    let _ = writeln!(o, "homologous to {}: {}", c.chain, c.homologous);
                }
                let _ = writeln!(o, "boundary identity: {}", if r.boundary_identity { "holds" } else { "FAILS" });
            }
            Report::Manifold(r) => {
                let yn = |b: bool| if b { "yes" } else { "no" };
                let _ = writeln!(o, "J = {}", join(&r.j));
                let _ = writeln!(o, "homology manifold: {}", yn(r.is_homology_manifold));
                let _ = writeln!(o, "dimension: {}", r.dimension);
                let _ = writeln!(o, "K is a generalized homology sphere: {}", yn(r.is_generalized_homology_sphere_input));
                let _ = writeln!(o, "H_1(K) = {}", r.h1_of_k);
                let _ = writeln!(o, "topological manifold: {}", r.topological_manifold_status);
                for w in &r.witnesses {
                    let _ = writeln!(
                        o,
                        "witness: link of {} has reduced homology {}, expected that of S^{}",
                        set(&w.simplex),
                        w.link_homology,
                        w.expected_sphere_dim
                    );
                }
            }
            Report::Kj(r) => o.push_str(&r.file),
        }
        o
    }
}
