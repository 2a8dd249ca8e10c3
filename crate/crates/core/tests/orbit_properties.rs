use std::collections::BTreeSet;

use cmspace::aut::random::{random_affine, random_triangular, random_u};
use cmspace::aut::{Factor, Letter, Word, WordBounds};
use cmspace::cm::{pgl_equivalent, base_point, CmPoint, Subgroup};
use cmspace::linalg::Matrix;
use cmspace::orbits::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn subgroup_letter(rng: &mut ChaCha8Rng, h: Subgroup) -> Letter {
    let bounds = WordBounds { word_len: 1, height: 4, degree: 3 };
    match h {
        Subgroup::U => random_u(rng, 4).to_letter(if rng.gen_bool(0.5) { Factor::A } else { Factor::B }),
        Subgroup::B => Letter::B(random_triangular(rng, &bounds)),
        Subgroup::A => Letter::A(random_affine(rng, 4)),
        Subgroup::G0 => unreachable!(),
    }
}

fn random_conjugator(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    loop {
        let data = (0..n * n)
            .map(|_| cmspace::aut::random::random_scalar(rng, 3))
            .collect();
        let g = Matrix::from_vec(n, data);
        if g.is_invertible() {
            return g;
        }
    }
}

#[test]
fn signatures_are_invariant() {
    let samples = sample_points(2, 20, 11, &WordBounds::default()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for h in [Subgroup::U, Subgroup::B, Subgroup::A] {
        for p in &samples.points {
            let sig = orbit_signature(h, p);
            let mut q = p.clone();
            for _ in 0..100 {
                // one letter at a time keeps entries small
                let l = subgroup_letter(&mut rng, h);
                let moved = Word::letter(l).act(p).unwrap();
                assert_eq!(orbit_signature(h, &moved), sig, "{h} at {p:?}");
                q = moved;
            }
            let g = random_conjugator(&mut rng, 2);
            assert_eq!(orbit_signature(h, &q.conjugate_by(&g)), sig);
        }
    }
}

#[test]
fn signatures_are_invariant_at_n3() {
    let samples = sample_points(3, 6, 13, &WordBounds { word_len: 3, height: 3, degree: 2 }).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for h in [Subgroup::U, Subgroup::B, Subgroup::A] {
        for p in &samples.points {
            let sig = orbit_signature(h, p);
            for _ in 0..10 {
                let moved = Word::letter(subgroup_letter(&mut rng, h)).act(p).unwrap();
                assert_eq!(orbit_signature(h, &moved), sig);
            }
        }
    }
}

#[test]
fn a_is_transitive_on_c1() {
    let s = sample_points(1, 50, 3, &WordBounds::default()).unwrap();
    let sigs: BTreeSet<Signature> = s.points.iter().map(|p| orbit_signature(Subgroup::A, p)).collect();
    assert_eq!(sigs.len(), 1);
    let g = build_orbit_graph(&s).unwrap();
    assert_eq!((g.a_vertices.len(), g.b_vertices.len(), g.edges.len()), (1, 1, 1));
}

#[test]
fn c2_census_on_a_small_sample() {
    let s = sample_points(2, 120, 21, &WordBounds::default()).unwrap();
    let cls = classify(&s.points);
    let dims: BTreeSet<usize> = cls.iter().map(|c| c.u.dim).collect();
    assert_eq!(dims, BTreeSet::from([3, 4]));
    let u: BTreeSet<&Signature> = cls.iter().map(|c| &c.u).collect();
    assert_eq!(u.len(), 3, "{u:#?}");
    for c in &cls {
        assert_eq!(c.a.dim, 4);
        assert_eq!(c.b.dim, c.u.dim);
        assert_eq!(c.b.invariants, c.u.invariants);
    }
    let g = build_from_classified(2, &s.points, &cls).unwrap();
    assert_eq!(g.a_vertices.len(), 1);
    assert_eq!(g.b_vertices.len(), 3);
    assert_eq!(g.edges.len(), 3);
    assert_eq!(g.nonterminal_count(), 1);
    assert!(g.connected);
}

#[test]
fn n0_graph_is_a_segment() {
    let s = SampleSet { n: 0, seed: 0, bounds: WordBounds::default(), points: vec![], words: vec![] };
    let g = build_orbit_graph(&s).unwrap();
    assert_eq!((g.vertex_count(), g.edges.len()), (2, 1));
}

#[test]
fn reduction_of_short_word_samples() {
    let bounds = WordBounds { word_len: 3, height: 5, degree: 3 };
    let s = sample_points(2, 40, 31, &bounds).unwrap();
    for p in &s.points {
        let r = reduce_to_basepoint(p, DEFAULT_BUDGET).unwrap();
        let w = r.word.expect("reduced");
        let image: CmPoint = w.act(p).unwrap();
        assert!(pgl_equivalent(&image, &base_point(2)).unwrap().is_some());
    }
}
