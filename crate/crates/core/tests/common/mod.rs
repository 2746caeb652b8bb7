#![allow(dead_code)]

use std::collections::BTreeMap;

use mackit::cells::{CellChain, CellWord, Flavor, WordClass, WordComplex};
use mackit::{SimplicialComplex, VertexSet};
use num_bigint::BigInt;
use rand::Rng;

pub fn vs(l: &[usize]) -> VertexSet {
    VertexSet::of(l)
}

/// A random complex on `[m]` generated by a few random subsets.
pub fn random_complex<R: Rng>(rng: &mut R, m: usize) -> SimplicialComplex {
    let count = rng.gen_range(1..=m + 2);
    let gens: Vec<VertexSet> = (0..count)
        .map(|_| (1..=m).filter(|_| rng.gen_bool(0.5)).collect())
        .collect();
    SimplicialComplex::new(m, gens).unwrap()
}

/// A random complex in which every label of `[m]` is a vertex.
pub fn random_complex_without_ghosts<R: Rng>(rng: &mut R, m: usize) -> SimplicialComplex {
    let k = random_complex(rng, m);
    let gens = k.facets().iter().copied().chain((1..=m).map(VertexSet::singleton));
    SimplicialComplex::new(m, gens).unwrap()
}

pub fn chain(s: &[usize], t: &[usize]) -> CellWord {
    CellWord::chain(vs(s), vs(t)).unwrap()
}

pub fn cochain(s: &[usize], t: &[usize]) -> CellWord {
    CellWord::cochain(vs(s), vs(t)).unwrap()
}

pub fn words(k: &SimplicialComplex, flavor: Flavor) -> Vec<CellWord> {
    let full = k.label_set();
    k.simplices()
        .into_iter()
        .flat_map(|s| (full - s).subsets().map(move |t| CellWord::new(s, t, flavor).unwrap()))
        .collect()
}

pub fn one(w: CellWord) -> CellChain {
    CellChain::from_word(w)
}

/// `Σ ± w` from `(σ, τ, coefficient)` triples.
pub fn combo(flavor: Flavor, terms: &[(&[usize], &[usize], i64)]) -> CellChain {
    CellChain::from_terms(
        flavor,
        terms
            .iter()
            .map(|(s, t, v)| (CellWord::new(vs(s), vs(t), flavor).unwrap(), *v)),
    )
    .unwrap()
}

/// Augmented simplicial boundary of a simplex, alternating by position.
pub fn simplex_boundary(s: VertexSet) -> Vec<(VertexSet, i64)> {
    s.to_vec()
        .iter()
        .enumerate()
        .map(|(pos, &v)| (s.remove(v), if pos % 2 == 0 { 1 } else { -1 }))
        .collect()
}

/// Coboundary of a dual simplex in `K_ω`: sum over cofaces, signed by the
/// position of the new vertex.
pub fn simplex_coboundary(k: &SimplicialComplex, s: VertexSet, omega: VertexSet) -> Vec<(VertexSet, i64)> {
    (omega - s)
        .iter()
        .filter(|&i| k.contains(s.insert(i)))
        .map(|i| {
            let pos = s.iter().filter(|&x| x < i).count();
            (s.insert(i), if pos % 2 == 0 { 1 } else { -1 })
        })
        .collect()
}

/// Free coordinates of a class laid out by summand offsets.
pub fn flatten(class: &WordClass, offsets: &BTreeMap<VertexSet, (usize, usize)>, total: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(0); total];
    for (omega, c) in class {
        let (off, len) = offsets[omega];
        assert_eq!(c.free.len(), len);
        for (k, x) in c.free.iter().enumerate() {
            out[off + k] = x.clone();
        }
    }
    out
}

/// `Some(s)` with `s = ±1` when the free parts satisfy `a = s·b`.
pub fn proportion(a: &WordClass, b: &WordClass) -> Option<i64> {
    if a.is_empty() || b.is_empty() {
        return None;
    }
    if a.keys().ne(b.keys()) {
        return None;
    }
    let mut ratio: Option<i64> = None;
    for (omega, x) in a {
        let y = &b[omega];
        for (p, q) in x.free.iter().zip(&y.free) {
            let r = if *p == BigInt::from(0) && *q == BigInt::from(0) {
                continue;
            } else if *p == *q {
                1
            } else if *p == -q.clone() {
                -1
            } else {
                return None;
            };
            if ratio.is_some_and(|x| x != r) {
                return None;
            }
            ratio = Some(r);
        }
    }
    ratio
}

/// Position of each summand's free coordinates in degree `p`.
pub fn offsets(w: &WordComplex, p: usize) -> (BTreeMap<VertexSet, (usize, usize)>, usize) {
    let mut out = BTreeMap::new();
    let mut total = 0;
    for omega in w.complex().label_set().subsets() {
        let r = w.summand(omega).solver(p as i32).group().rank;
        if r > 0 {
            out.insert(omega, (total, r));
            total += r;
        }
    }
    (out, total)
}
