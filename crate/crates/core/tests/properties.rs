mod common;

use std::collections::{BTreeMap, BTreeSet};

use mackit::cells::{CellChain, Flavor};
use mackit::dga::{varpi_i, Dga, DgaElement};
use mackit::homology::reduced_homology;
use mackit::manifold::is_generalized_homology_sphere;
use mackit::products::{
    simplicial_cap, simplicial_cup, whitney_cap, whitney_cup, word_cup, ProductCell, ProductChain,
    ProductSubcomplex, SimplexChain,
};
use mackit::simplicial::{parse_complex, write_complex, ComplexFileStyle};
use mackit::{JTuple, SimplicialComplex, VertexSet};
use proptest::prelude::*;

use common::*;

fn complex(max_m: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_m).prop_flat_map(|m| {
        prop::collection::vec(0..(1u64 << m), 1..=m + 2)
            .prop_map(move |g| SimplicialComplex::new(m, g.into_iter().map(VertexSet::from_bits)).unwrap())
    })
}

fn complex_with_j(max_m: usize, max_entry: usize) -> impl Strategy<Value = (SimplicialComplex, JTuple)> {
    complex(max_m).prop_flat_map(move |k| {
        let m = k.m();
        (Just(k), prop::collection::vec(1..=max_entry, m).prop_map(|v| JTuple::new(v).unwrap()))
    })
}

fn without_ghosts(k: &SimplicialComplex) -> SimplicialComplex {
    let gens = k.facets().iter().copied().chain((1..=k.m()).map(VertexSet::singleton));
    SimplicialComplex::new(k.m(), gens).unwrap()
}

fn random_cochain(k: &SimplicialComplex, seed: &[i8], degree: Option<usize>) -> CellChain {
    let ws: Vec<_> = words(k, Flavor::Cochain)
        .into_iter()
        .filter(|w| degree.is_none_or(|d| w.degree() == d))
        .collect();
    let mut c = CellChain::zero(Flavor::Cochain);
    if ws.is_empty() {
        return c;
    }
    for (n, &v) in seed.iter().enumerate() {
        c.add_term(ws[(n * 7 + v.unsigned_abs() as usize) % ws.len()], v as i64);
    }
    c
}

fn all_monomials(r: &Dga) -> Vec<DgaElement> {
    let k = r.complex();
    k.simplices()
        .into_iter()
        .flat_map(|s| (k.label_set() - s).subsets().map(move |t| (s, t)))
        .map(|(s, t)| r.element(s, t).unwrap())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn word_cup_is_associative_and_unital(k in complex(4)) {
        let ws = words(&k, Flavor::Cochain);
        let unit = one(mackit::CellWord::void(Flavor::Cochain));
        for &a in &ws {
            prop_assert_eq!(word_cup(&unit, &one(a), &k).unwrap(), one(a));
            prop_assert_eq!(word_cup(&one(a), &unit, &k).unwrap(), one(a));
        }
        for &a in ws.iter().step_by(3) {
            for &b in &ws {
                let ab = word_cup(&one(a), &one(b), &k).unwrap();
                for &c in ws.iter().step_by(2) {
                    let l = word_cup(&ab, &one(c), &k).unwrap();
                    let r = word_cup(&one(a), &word_cup(&one(b), &one(c), &k).unwrap(), &k).unwrap();
                    prop_assert_eq!(l, r);
                }
            }
        }
    }

    #[test]
    fn coboundary_is_a_derivation(
        k in complex(6),
        sa in prop::collection::vec(-3i8..=3, 1..4),
        sb in prop::collection::vec(-3i8..=3, 1..4),
        p in 0usize..3,
    ) {
        let a = random_cochain(&k, &sa, Some(p));
        let b = random_cochain(&k, &sb, None);
        let lhs = word_cup(&a, &b, &k).unwrap().coboundary(&k).unwrap();
        let t1 = word_cup(&a.coboundary(&k).unwrap(), &b, &k).unwrap();
        let t2 = word_cup(&a, &b.coboundary(&k).unwrap(), &k).unwrap().scale(if p % 2 == 0 { 1 } else { -1 });
        prop_assert_eq!(lhs, t1.add(&t2).unwrap());
    }

    #[test]
    fn dga_square_zero_and_leibniz((k, j) in complex_with_j(4, 3)) {
        let r = Dga::new(&k, &j).unwrap();
        let monos = all_monomials(&r);
        for x in &monos {
            let dx = r.differential(x).unwrap();
            prop_assert!(r.differential(&dx).unwrap().is_zero());
        }
        for x in monos.iter().step_by(2) {
            let p = r.homogeneous_degree(x).unwrap();
            for y in &monos {
                let lhs = r.differential(&r.multiply(x, y).unwrap()).unwrap();
                let t1 = r.multiply(&r.differential(x).unwrap(), y).unwrap();
                let t2 = r.multiply(x, &r.differential(y).unwrap()).unwrap().scale(if p % 2 == 0 { 1 } else { -1 });
                prop_assert_eq!(lhs, t1.add(&t2));
            }
        }
    }

    #[test]
    fn dga_products_associate((k, j) in complex_with_j(3, 3)) {
        let r = Dga::new(&k, &j).unwrap();
        let monos = all_monomials(&r);
        for x in &monos {
            for y in &monos {
                let xy = r.multiply(x, y).unwrap();
                for z in &monos {
                    let l = r.multiply(&xy, z).unwrap();
                    let rr = r.multiply(x, &r.multiply(y, z).unwrap()).unwrap();
                    prop_assert_eq!(l, rr);
                }
            }
        }
    }

    #[test]
    fn graded_commutativity_on_disjoint_supports((k, j) in complex_with_j(4, 3)) {
        let r = Dga::new(&k, &j).unwrap();
        let monos = all_monomials(&r);
        for x in &monos {
            for y in &monos {
                let sx = x.terms().next().unwrap().0.omega();
                let sy = y.terms().next().unwrap().0.omega();
                if !sx.is_disjoint(sy) {
                    continue;
                }
                let p = r.homogeneous_degree(x).unwrap() * r.homogeneous_degree(y).unwrap();
                let s = if p % 2 == 0 { 1 } else { -1 };
                prop_assert_eq!(r.multiply(x, y).unwrap(), r.multiply(y, x).unwrap().scale(s));
            }
        }
    }

    #[test]
    fn varpi_preserves_d_and_shifts_summand_cohomology(k in complex(4), pick in 0usize..4) {
        let k = without_ghosts(&k);
        let i = pick % k.m() + 1;
        let wedge = k.simplicial_wedge(i).unwrap();
        let src = Dga::new(&k, &JTuple::ones(k.m())).unwrap();
        let dst = Dga::new(&wedge, &JTuple::ones(wedge.m())).unwrap();
        for x in all_monomials(&src) {
            let l = varpi_i(&src.differential(&x).unwrap(), &k, i).unwrap();
            let rr = dst.differential(&varpi_i(&x, &k, i).unwrap()).unwrap();
            prop_assert_eq!(l, rr);
        }
        for omega in k.label_set().subsets() {
            let image = omega.shift_above(i, 1);
            let (target, shift) = if omega.contains(i) { (image.insert(i + 1), 1) } else { (image, 0) };
            let a = src.summand(omega).unwrap().homology_all();
            let b = dst.summand(target).unwrap().homology_all();
            let a: BTreeMap<i32, _> = a.into_iter().map(|(p, h)| (p + shift, h)).collect();
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn homology_spheres_have_sphere_euler_characteristic(k in complex(6)) {
        let n = k.dim();
        if is_generalized_homology_sphere(&k, n).0 {
            let want = if n % 2 == 0 { 2 } else { 0 };
            prop_assert_eq!(k.euler_characteristic(), want);
        }
    }

    #[test]
    fn wedge_preserves_homology_spheres(k in complex(5), pick in 0usize..5) {
        let k = without_ghosts(&k);
        let i = pick % k.m() + 1;
        let wedge = k.simplicial_wedge(i).unwrap();
        prop_assert_eq!(
            is_generalized_homology_sphere(&k, k.dim()).0,
            is_generalized_homology_sphere(&wedge, wedge.dim()).0
        );
    }

    #[test]
    fn simplicial_products_associate(
        k in complex(5),
        seeds in prop::collection::vec(-2i64..=2, 9),
    ) {
        let simplices: Vec<VertexSet> = k.simplices().into_iter().filter(|s| !s.is_empty()).collect();
        prop_assume!(!simplices.is_empty());
        let pick = |n: usize| -> SimplexChain {
            let mut c = SimplexChain::new();
            for t in 0..3 {
                let v = seeds[n * 3 + t];
                if v != 0 {
                    *c.entry(simplices[(n * 5 + t * 3 + v.unsigned_abs() as usize) % simplices.len()]).or_insert(0) += v;
                }
            }
            c.retain(|_, v| *v != 0);
            c
        };
        let (a, b, c) = (pick(0), pick(1), pick(2));
        let l = simplicial_cup(&simplicial_cup(&a, &b, &k), &c, &k);
        let r = simplicial_cup(&a, &simplicial_cup(&b, &c, &k), &k);
        prop_assert_eq!(l, r);
        let z: SimplexChain = simplices.iter().map(|s| (*s, 1)).collect();
        let l = simplicial_cap(&simplicial_cup(&a, &b, &k), &z);
        let r = simplicial_cap(&a, &simplicial_cap(&b, &z));
        prop_assert_eq!(l, r);
    }

    #[test]
    fn whitney_products_on_random_subcomplexes(
        factors in prop::collection::vec(complex(3), 1..=3),
        picks in prop::collection::vec(any::<u32>(), 1..6),
        coeffs in prop::collection::vec(-2i64..=2, 6),
    ) {
        let full = ProductSubcomplex::full(factors.clone());
        let all: Vec<ProductCell> = full.cells().cloned().collect();
        prop_assume!(!all.is_empty());
        let mut cells = BTreeSet::new();
        let mut stack: Vec<ProductCell> = picks.iter().map(|p| all[*p as usize % all.len()].clone()).collect();
        while let Some(c) = stack.pop() {
            if !cells.insert(c.clone()) {
                continue;
            }
            for (i, s) in c.iter().enumerate() {
                if s.len() >= 2 {
                    for v in s.iter() {
                        let mut f = c.clone();
                        f[i] = s.remove(v);
                        stack.push(f);
                    }
                }
            }
        }
        let sub = ProductSubcomplex::new(factors, cells.iter().cloned()).unwrap();
        let list: Vec<ProductCell> = cells.into_iter().collect();
        let dim = |c: &ProductCell| c.iter().map(|s| s.len() - 1).sum::<usize>();
        let homogeneous = |d: usize, shift: usize| -> ProductChain {
            let of_dim: Vec<&ProductCell> = list.iter().filter(|c| dim(c) == d).collect();
            let mut out = ProductChain::new();
            if of_dim.is_empty() {
                return out;
            }
            for (n, &v) in coeffs.iter().enumerate() {
                if v != 0 {
                    *out.entry(of_dim[(n * 3 + shift) % of_dim.len()].clone()).or_insert(0) += v;
                }
            }
            out.retain(|_, v| *v != 0);
            out
        };
        let add = |a: &ProductChain, b: &ProductChain, s: i64| -> ProductChain {
            let mut out = a.clone();
            for (c, v) in b {
                *out.entry(c.clone()).or_insert(0) += s * v;
            }
            out.retain(|_, v| *v != 0);
            out
        };
        for p in 0..3 {
            let a = homogeneous(p, 1);
            let b = homogeneous(1, 2);
            let lhs = sub.coboundary(&whitney_cup(&a, &b, &sub).unwrap()).unwrap();
            let t1 = whitney_cup(&sub.coboundary(&a).unwrap(), &b, &sub).unwrap();
            let t2 = whitney_cup(&a, &sub.coboundary(&b).unwrap(), &sub).unwrap();
            prop_assert_eq!(lhs, add(&t1, &t2, if p % 2 == 0 { 1 } else { -1 }));
            for r in p..p + 3 {
                let z = homogeneous(r, 0);
                let lhs = sub.boundary(&whitney_cap(&a, &z, &sub).unwrap()).unwrap();
                let t1 = whitney_cap(&sub.coboundary(&a).unwrap(), &z, &sub).unwrap();
                let t2 = whitney_cap(&a, &sub.boundary(&z).unwrap(), &sub).unwrap();
                prop_assert_eq!(lhs, add(&t2, &t1, if (r - p) % 2 == 0 { 1 } else { -1 }));
            }
        }
    }

    #[test]
    fn complex_files_round_trip(k in complex(8), missing in any::<bool>()) {
        let style = if missing { ComplexFileStyle::Missing } else { ComplexFileStyle::Facets };
        let text = write_complex(&k, style, &["generated".to_string()]);
        prop_assert_eq!(parse_complex(&text).unwrap(), k);
    }

    #[test]
    fn links_of_spheres_are_spheres(k in complex(5)) {
        let n = k.dim();
        if is_generalized_homology_sphere(&k, n).0 {
            for s in k.simplices() {
                let h = reduced_homology(&k.link(s).unwrap());
                prop_assert_eq!(h.iter().count(), 1);
            }
        }
    }
}
