//! The `mac-kit` command-line front end: load a complex, run one computation
//! and render a deterministic report.

pub mod expr;
pub mod report;

use std::collections::BTreeMap;
use std::path::PathBuf;

use mackit::cells::WordClass;
use mackit::dga::VarpiEmbedding;
use mackit::homology::reduced_homology_all_subsets;
use mackit::products::{fundamental_class, word_cap};
use mackit::simplicial::{parse_complex, write_complex, ComplexFileStyle};
use mackit::{
    manifold_verdict, CellChain, CellWord, Dga, DgaElement, Flavor, GradedHomology, HomologyGroup, JTuple,
    MacError, Result, SimplicialComplex, VertexSet, WordComplex,
};
use num_bigint::BigInt;

use expr::{parse_expr, Atom, Expr};
use report::*;

pub const DEFAULT_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Task {
    Betti,
    Ring { triples: Vec<[VertexSet; 3]> },
    Cap { cochain: String, chain: String, compare: Option<String> },
    Manifold,
    Kj,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub input: PathBuf,
    pub task: Task,
    /// Raw `--J` value; defaults to all ones once `m` is known.
    pub j: Option<String>,
    /// Largest vertex count allowed in a subset sweep.
    pub cap: usize,
    pub format: Format,
    pub parallel: Option<usize>,
}

pub fn exit_code(e: &MacError) -> u8 {
    match e {
        MacError::Parse { .. } | MacError::Input(_) | MacError::NotManifold(_) => 2,
        MacError::Resource(_) => 3,
        MacError::Invariant(_) => 4,
    }
}

/// Parses `1,6,7` or `{1,6,7}`.
pub fn parse_omega(text: &str) -> Result<VertexSet> {
    let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
    let mut s = VertexSet::EMPTY;
    for tok in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let l: usize = tok
            .parse()
            .map_err(|_| MacError::parse(1, format!("bad label {tok:?} in {text:?}")))?;
        if l == 0 || l > mackit::vertex_set::MAX_LABEL {
            return Err(MacError::parse(1, format!("label {l} out of range in {text:?}")));
        }
        s = s.insert(l);
    }
    Ok(s)
}

pub fn run(config: &RunConfig) -> Result<Report> {
    if config.cap == 0 {
        return Err(MacError::input("--cap must be positive"));
    }
    match config.parallel {
        Some(0) => Err(MacError::input("--parallel must be positive")),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| MacError::resource(format!("cannot start {n} threads: {e}")))?
            .install(|| dispatch(config)),
        None => dispatch(config),
    }
}

fn dispatch(config: &RunConfig) -> Result<Report> {
    let text = std::fs::read_to_string(&config.input)
        .map_err(|e| MacError::input(format!("cannot read {}: {e}", config.input.display())))?;
    let k = parse_complex(&text)?;
    let j = match &config.j {
        Some(s) => s.parse::<JTuple>()?,
        None => JTuple::ones(k.m()),
    };
    j.check_len(k.m())?;
    match &config.task {
        Task::Betti => betti(&k, &j, config.cap),
        Task::Ring { triples } => ring(&k, &j, config.cap, triples),
        Task::Cap { cochain, chain, compare } => cap(&k, &j, config.cap, cochain, chain, compare.as_deref()),
        Task::Manifold => manifold(&k, &j),
        Task::Kj => kj(&k, &j),
    }
}

fn labels(s: VertexSet) -> Vec<usize> {
    s.iter().collect()
}

fn group(h: &HomologyGroup) -> Result<Group> {
    let torsion = h
        .torsion
        .iter()
        .map(|t| u64::try_from(t).map_err(|_| MacError::resource(format!("torsion order {t} exceeds 64 bits"))))
        .collect::<Result<_>>()?;
    Ok(Group { rank: h.rank, torsion })
}

fn small(x: &BigInt) -> Result<i64> {
    i64::try_from(x).map_err(|_| MacError::resource(format!("coefficient {x} exceeds 64 bits")))
}

fn check_cap(m: usize, cap: usize) -> Result<()> {
    if m > cap {
        return Err(MacError::resource(format!("{m} vertices exceeds the cap of {cap}")));
    }
    Ok(())
}

fn betti(k: &SimplicialComplex, j: &JTuple, cap: usize) -> Result<Report> {
    let kj = k.kj_construction(j)?;
    check_cap(kj.m(), cap)?;
    let sweep = reduced_homology_all_subsets(&kj, Some(cap))?;
    let mut total = GradedHomology::new();
    let mut summands = Vec::new();
    for (omega, h) in sweep.nonzero() {
        total.merge(&h.shifted(1));
        for (q, g) in h.iter().filter(|(_, g)| !g.is_zero()) {
            summands.push(SummandRow {
                omega: labels(omega),
                degree: q + 1,
                group: group(g)?,
            });
        }
    }
    summands.sort_by(|a, b| (a.degree, a.omega.len(), &a.omega).cmp(&(b.degree, b.omega.len(), &b.omega)));
    let top = total.top_degree().unwrap_or(-1);
    let homology = (0..=top)
        .map(|p| {
            Ok(DegreeGroup {
                degree: p,
                group: group(&total.get(p))?,
            })
        })
        .collect::<Result<_>>()?;
    Ok(Report::Betti(BettiReport {
        j: j.entries().to_vec(),
        m: kj.m(),
        betti: total.betti(),
        homology,
        summands,
    }))
}

fn ring(k: &SimplicialComplex, j: &JTuple, cap: usize, triples: &[[VertexSet; 3]]) -> Result<Report> {
    check_cap(k.m(), cap)?;
    let dga = Dga::new(k, j)?;
    let gens = dga.ring_generators()?;
    let mut index_triples = Vec::new();
    for t in triples {
        let pick = |omega: VertexSet| -> Result<Vec<usize>> {
            let found: Vec<usize> = (0..gens.len()).filter(|&n| gens[n].omega == omega).collect();
            if found.is_empty() {
                return Err(MacError::input(format!("no cohomology class is supported on {omega}")));
            }
            Ok(found)
        };
        for a in pick(t[0])? {
            for b in pick(t[1])? {
                for c in pick(t[2])? {
                    index_triples.push((a, b, c));
                }
            }
        }
    }
    let ring = dga.ring_structure(&index_triples)?;
    let row = |p: &mackit::dga::RingProduct| -> Result<ProductRow> {
        Ok(ProductRow {
            factors: p.factors.clone(),
            product: p.product.to_string(),
            class: p
                .expansion
                .iter()
                .map(|(n, c)| {
                    Ok(Coefficient {
                        generator: *n,
                        coefficient: small(c)?,
                    })
                })
                .collect::<Result<_>>()?,
        })
    };
    Ok(Report::Ring(RingReport {
        j: j.entries().to_vec(),
        generators: ring
            .generators
            .iter()
            .enumerate()
            .map(|(n, g)| {
                Ok(GeneratorRow {
                    index: n,
                    omega: labels(g.omega),
                    degree: g.degree,
                    simplicial_degree: g.simplicial_degree,
                    order: g
                        .order
                        .as_ref()
                        .map(|o| u64::try_from(o).map_err(|_| MacError::resource("torsion order exceeds 64 bits")))
                        .transpose()?,
                    cocycle: g.cocycle.to_string(),
                })
            })
            .collect::<Result<_>>()?,
        pairs: ring.pairs.iter().map(row).collect::<Result<_>>()?,
        triples: ring.triples.iter().map(row).collect::<Result<_>>()?,
    }))
}

fn forbid(e: &Expr, letters: &str, what: &str) -> Result<()> {
    for c in letters.chars() {
        if e.mentions(c) {
            let name = if c == 'G' { "Gamma".to_string() } else { format!("`{c}`") };
            return Err(MacError::parse(1, format!("{name} cannot appear in {what}")));
        }
    }
    Ok(())
}

/// A cochain on `K(J)`: words in `u`/`t`, or an element of `R*_K(J)` in
/// `v`/`u` pushed forward along the block embedding.
fn cochain_of(e: &Expr, k: &SimplicialComplex, j: &JTuple, kj: &SimplicialComplex) -> Result<CellChain> {
    forbid(e, "eG", "a cochain")?;
    if e.mentions('v') {
        forbid(e, "t", "an algebra element")?;
        let emb = VarpiEmbedding::new(k, j)?;
        let mut a = DgaElement::zero();
        for (c, atom) in &e.terms {
            if let Atom::Word { u, v, .. } = atom {
                a.add_term(emb.source.monomial(v.unwrap_or(VertexSet::EMPTY), *u)?, *c);
            }
        }
        return Ok(emb.map(&a)?.to_cochain());
    }
    let mut terms = Vec::new();
    for (c, atom) in &e.terms {
        if let Atom::Word { u, t, .. } = atom {
            terms.push((CellWord::cochain(*u, t.unwrap_or(VertexSet::EMPTY))?, *c));
        }
    }
    let out = CellChain::from_terms(Flavor::Cochain, terms)?;
    out.check(kj)?;
    Ok(out)
}

fn chain_of(e: &Expr, kj: &SimplicialComplex) -> Result<CellChain> {
    forbid(e, "tv", "a chain")?;
    let mut out = CellChain::zero(Flavor::Chain);
    let mut gamma: Option<CellChain> = None;
    for (c, atom) in &e.terms {
        match atom {
            Atom::Gamma => {
                if gamma.is_none() {
                    gamma = Some(fundamental_class(kj)?);
                }
                out = out.add(&gamma.as_ref().expect("set above").scale(*c))?;
            }
            Atom::Word { u, e, .. } => out.add_term(CellWord::chain(*u, e.unwrap_or(VertexSet::EMPTY))?, *c),
        }
    }
    out.check(kj)?;
    Ok(out)
}

fn by_degree(c: &CellChain) -> BTreeMap<usize, CellChain> {
    let mut out: BTreeMap<usize, CellChain> = BTreeMap::new();
    for (w, v) in c.terms() {
        out.entry(w.degree()).or_insert_with(|| CellChain::zero(c.flavor())).add_term(w, v);
    }
    out
}

fn class_rows(class: WordClass) -> Result<Vec<ClassRow>> {
    class
        .into_iter()
        .map(|(omega, c)| {
            Ok(ClassRow {
                omega: labels(omega),
                torsion: c.torsion.iter().map(|(r, _)| small(r)).collect::<Result<_>>()?,
                free: c.free.iter().map(small).collect::<Result<_>>()?,
            })
        })
        .collect()
}

fn cap(
    k: &SimplicialComplex,
    j: &JTuple,
    cap: usize,
    cochain: &str,
    chain: &str,
    compare: Option<&str>,
) -> Result<Report> {
    let kj = k.kj_construction(j)?;
    check_cap(kj.m(), cap)?;
    let a = cochain_of(&parse_expr(cochain)?, k, j, &kj)?;
    let z = chain_of(&parse_expr(chain)?, &kj)?;
    let result = word_cap(&a, &z)?;
    let cochain_is_cocycle = a.coboundary(&kj)?.is_zero();
    let chain_is_cycle = z.boundary()?.is_zero();

    let mut lhs = CellChain::zero(Flavor::Chain);
    let mut rhs = CellChain::zero(Flavor::Chain);
    for (p, ap) in by_degree(&a) {
        let dap = ap.coboundary(&kj)?;
        for (r, zr) in by_degree(&z) {
            lhs = lhs.add(&word_cap(&ap, &zr)?.boundary()?)?;
            let s = if (p + r) % 2 == 0 { 1 } else { -1 };
            rhs = rhs.add(&word_cap(&dap, &zr)?.scale(s))?;
            rhs = rhs.add(&word_cap(&ap, &zr.boundary()?)?)?;
        }
    }
    if lhs != rhs {
        return Err(MacError::invariant(format!(
            "boundary of the cap product disagrees: {lhs} versus {rhs}"
        )));
    }

    let chains = WordComplex::new(&kj, Flavor::Chain)?;
    let closed = cochain_is_cocycle && chain_is_cycle && result.homogeneous_degree().is_some();
    let class = if closed && !result.is_zero() {
        Some(class_rows(chains.class_of(&result)?)?)
    } else if closed {
        Some(Vec::new())
    } else {
        None
    };
    let comparison = match compare {
        None => None,
        Some(text) => {
            if !closed {
                return Err(MacError::input("comparison needs a cocycle and a cycle"));
            }
            let other = chain_of(&parse_expr(text)?, &kj)?;
            let diff = result.add(&other.neg())?;
            let homologous = diff.is_zero() || chains.class_of(&diff)?.values().all(|c| c.is_zero());
            Some(Comparison {
                chain: other.to_string(),
                homologous,
            })
        }
    };
    Ok(Report::Cap(CapReport {
        j: j.entries().to_vec(),
        cochain: a.to_string(),
        chain: z.to_string(),
        result: result.to_string(),
        cochain_is_cocycle,
        chain_is_cycle,
        class,
        comparison,
        boundary_identity: true,
    }))
}

fn manifold(k: &SimplicialComplex, j: &JTuple) -> Result<Report> {
    let v = manifold_verdict(k, j)?;
    Ok(Report::Manifold(ManifoldReport {
        j: j.entries().to_vec(),
        is_homology_manifold: v.is_homology_manifold,
        dimension: v.dimension,
        is_generalized_homology_sphere_input: v.is_generalized_homology_sphere_input,
        h1_of_k: v.h1_of_k.to_string(),
        topological_manifold_status: v.topological_manifold_status.to_string(),
        witnesses: v
            .witnesses
            .iter()
            .map(|w| WitnessRow {
                simplex: labels(w.simplex),
                expected_sphere_dim: w.expected_sphere_dim,
                link_homology: w.link_homology.to_string(),
            })
            .collect(),
    }))
}

fn kj(k: &SimplicialComplex, j: &JTuple) -> Result<Report> {
    let kj = k.kj_construction(j)?;
    if kj != k.kj_by_wedges(j)? {
        return Err(MacError::invariant("K(J) differs from its iterated-wedge construction"));
    }
    let blocks: Vec<BlockRow> = (1..=k.m())
        .map(|v| BlockRow {
            vertex: v,
            labels: labels(j.block(v)),
        })
        .collect();
    let mut comments = vec![format!("K(J) for J = {j}")];
    comments.extend(blocks.iter().map(|b| {
        let l: Vec<String> = b.labels.iter().map(ToString::to_string).collect();
        format!("vertex {} -> block {}", b.vertex, l.join(" "))
    }));
    Ok(Report::Kj(KjReport {
        j: j.entries().to_vec(),
        m: kj.m(),
        blocks,
        facets: kj.facets().iter().map(|f| labels(*f)).collect(),
        file: write_complex(&kj, ComplexFileStyle::Facets, &comments),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_by_error_kind() {
        assert_eq!(exit_code(&MacError::parse(3, "x")), 2);
        assert_eq!(exit_code(&MacError::input("x")), 2);
        assert_eq!(exit_code(&MacError::resource("x")), 3);
        assert_eq!(exit_code(&MacError::invariant("x")), 4);
    }

    #[test]
    fn omega_syntax() {
        assert_eq!(parse_omega("1,6,7").unwrap(), VertexSet::of(&[1, 6, 7]));
        assert_eq!(parse_omega("{2, 4}").unwrap(), VertexSet::of(&[2, 4]));
        assert_eq!(parse_omega("{}").unwrap(), VertexSet::EMPTY);
        assert!(parse_omega("1,a").is_err());
        assert!(parse_omega("0").is_err());
    }
}
