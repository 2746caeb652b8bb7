//! Homology-sphere recognition and manifold verdicts for `(D¹,S⁰)^{K(J)}`.

use std::fmt;

use rayon::prelude::*;

use crate::error::Result;
use crate::homology::{reduced_homology, unreduced_homology, GradedHomology, HomologyGroup};
use crate::simplicial::{JTuple, SimplicialComplex};
use crate::vertex_set::VertexSet;

/// A simplex whose link lacks the homology of the expected sphere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkWitness {
    pub simplex: VertexSet,
    pub expected_sphere_dim: isize,
    pub link_homology: GradedHomology,
}

impl fmt::Display for LinkWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "link of {} has reduced homology {} (expected that of S^{})",
            self.simplex, self.link_homology, self.expected_sphere_dim
        )
    }
}

fn sphere_homology(d: isize) -> GradedHomology {
    GradedHomology::from_groups([(d as i32, HomologyGroup::free(1))])
}

/// Checks that `K` and the link of every simplex have the reduced homology of
/// spheres of dimension `dim - |σ|`. Returns every failing simplex.
pub fn is_generalized_homology_sphere(k: &SimplicialComplex, dim: isize) -> (bool, Vec<LinkWitness>) {
    let simplices = k.simplices();
    let mut witnesses: Vec<LinkWitness> = simplices
        .par_iter()
        .filter_map(|&s| {
            let link = k.link(s).expect("simplex of K");
            let h = reduced_homology(&link);
            let expected = dim - s.len() as isize;
            (h != sphere_homology(expected)).then_some(LinkWitness {
                simplex: s,
                expected_sphere_dim: expected,
                link_homology: h,
            })
        })
        .collect();
    witnesses.sort_by_key(|w| (w.simplex.len(), w.simplex));
    (witnesses.is_empty(), witnesses)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TopologicalStatus {
    Yes,
    YesByLowDimension,
    ConditionalOnPi1,
    No,
}

impl fmt::Display for TopologicalStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TopologicalStatus::Yes => "yes",
            TopologicalStatus::YesByLowDimension => "yes-by-low-dimension",
            TopologicalStatus::ConditionalOnPi1 => "conditional-on-pi1",
            TopologicalStatus::No => "no",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifoldVerdict {
    pub is_homology_manifold: bool,
    /// `n + d(J) - m` with `n = dim K + 1`.
    pub dimension: isize,
    pub is_generalized_homology_sphere_input: bool,
    pub h1_of_k: HomologyGroup,
    pub topological_manifold_status: TopologicalStatus,
    pub witnesses: Vec<LinkWitness>,
}

/// Whether `(D¹,S⁰)^{K(J)}` is a homology manifold, and what is known about
/// it being a topological manifold.
pub fn manifold_verdict(k: &SimplicialComplex, j: &JTuple) -> Result<ManifoldVerdict> {
    j.check_len(k.m())?;
    let n = k.dim() + 1;
    let (ok, witnesses) = is_generalized_homology_sphere(k, n - 1);
    let h1_of_k = unreduced_homology(k).get(1);
    let status = if !ok {
        TopologicalStatus::No
    } else if j.d() > k.m() {
        TopologicalStatus::Yes
    } else if n <= 2 {
        TopologicalStatus::YesByLowDimension
    } else {
        TopologicalStatus::ConditionalOnPi1
    };
    Ok(ManifoldVerdict {
        is_homology_manifold: ok,
        dimension: n + j.d() as isize - k.m() as isize,
        is_generalized_homology_sphere_input: ok,
        h1_of_k,
        topological_manifold_status: status,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::catalog::*;

    #[test]
    fn spheres_pass() {
        assert!(is_generalized_homology_sphere(&pentagon(), 1).0);
        assert!(is_generalized_homology_sphere(&heptagon_sphere(), 3).0);
        assert!(is_generalized_homology_sphere(&SimplicialComplex::simplex_boundary(4), 2).0);
        assert!(is_generalized_homology_sphere(&two_points(), 0).0);
    }

    #[test]
    fn disjoint_edges_fail_at_the_empty_simplex() {
        let k = SimplicialComplex::from_facet_lists(4, &[&[1, 2], &[3, 4]]);
        let (ok, w) = is_generalized_homology_sphere(&k, 1);
        assert!(!ok);
        assert_eq!(w[0].simplex, VertexSet::EMPTY);
        let v = manifold_verdict(&k, &JTuple::ones(4)).unwrap();
        assert!(!v.is_homology_manifold);
        assert_eq!(v.topological_manifold_status, TopologicalStatus::No);
        assert!(!v.witnesses.is_empty());
    }

    #[test]
    fn projective_plane_fails() {
        let (ok, w) = is_generalized_homology_sphere(&projective_plane(), 2);
        assert!(!ok);
        assert_eq!(w.len(), 1);
    }

    #[test]
    fn verdicts() {
        let v = manifold_verdict(&pentagon(), &JTuple::ones(5)).unwrap();
        assert!(v.is_homology_manifold);
        assert_eq!(v.dimension, 2);
        assert_eq!(v.topological_manifold_status, TopologicalStatus::YesByLowDimension);
        let v = manifold_verdict(&pentagon(), &JTuple::constant(5, 2).unwrap()).unwrap();
        assert_eq!(v.dimension, 7);
        assert_eq!(v.topological_manifold_status, TopologicalStatus::Yes);
        let v = manifold_verdict(&heptagon_sphere(), &JTuple::ones(7)).unwrap();
        assert_eq!(v.dimension, 4);
        assert_eq!(v.topological_manifold_status, TopologicalStatus::ConditionalOnPi1);
        assert!(v.h1_of_k.is_zero());
        let v = manifold_verdict(&heptagon_sphere(), &JTuple::constant(7, 2).unwrap()).unwrap();
        assert_eq!(v.dimension, 11);
        assert_eq!(v.topological_manifold_status, TopologicalStatus::Yes);
    }
}
