//! Acceptance suite: one PASS/FAIL line per criterion, each under its time
//! limit. Run with `cargo test -p cmspace --test acceptance`.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cmspace::aut::random::{random_nonzero, random_poly, random_scalar, random_word};
use cmspace::aut::{
    is_identity, is_translation_word, normal_form, phi, phi_x, psi, scaling, stabilizes_basepoint, Family, Word,
    WordBounds,
};
use cmspace::bass_serre::{
    fundamental_group_presentation, gog_for_cn, recorded_presentation, spanning_tree, Edge, GraphOfGroups, GroupDesc,
    Monomorphism, Vertex,
};
use cmspace::cm::{base_point, orbit_tangent_dimension, pgl_equivalent, rank_one_defect, CmPoint, Subgroup};
use cmspace::linalg::{int, Matrix, Polynomial, Scalar};
use cmspace::orbits::{build_orbit_graph, classify, reduce_to_basepoint, sample_points, DEFAULT_BUDGET};
use common::{conjugate_2x2_oracle, conjugate_point, random_invertible};
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e2s<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn rank_one(p: &CmPoint) -> bool {
    rank_one_defect(p.x(), p.y()).rank() == 1
}

/// A point of `C_n` reached from the base point by a random word.
fn random_point(rng: &mut ChaCha8Rng, n: usize, bounds: &WordBounds) -> CmPoint {
    let w = random_word(rng, bounds);
    w.act(&base_point(n)).expect("action preserves the rank-one condition")
}

fn c1_base_points() -> Check {
    for n in 1..=8 {
        let p = base_point(n);
        ensure(rank_one(&p), || format!("n = {n}: rank ≠ 1"))?;
    }
    Ok("n = 1..8".into())
}

fn c2_action_soundness() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0xA2);
    let bounds = WordBounds::default();
    for i in 0..500 {
        let n = 1 + i % 3;
        let p = random_point(&mut rng, n, &bounds);
        let w = random_word(&mut rng, &bounds);
        let q = w.act(&p).map_err(e2s)?;
        ensure(rank_one(&q), || format!("rank-one lost: {w} on {p:?}"))?;
    }
    for i in 0..200 {
        let n = 1 + i % 3;
        let p = random_point(&mut rng, n, &bounds);
        let (w1, w2) = (random_word(&mut rng, &bounds), random_word(&mut rng, &bounds));
        let nested = w1.act(&w2.act(&p).map_err(e2s)?).map_err(e2s)?;
        let product = w1.concat(&w2);
        ensure(product.act(&p).map_err(e2s)? == nested, || format!("law fails for {w1} , {w2}"))?;
        // the reduced product is computed by composing letters, not by
        // applying them in turn
        let reduced = normal_form(&product).to_word();
        ensure(reduced.act(&p).map_err(e2s)? == nested, || format!("law fails after reduction: {w1} , {w2}"))?;
    }
    Ok("500 pairs, 200 triples".into())
}

fn c3_word_problem() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0xA3);
    let bounds = WordBounds { word_len: 6, ..WordBounds::default() };
    let mut max_len = 0;
    for i in 0..200 {
        let w = random_word(&mut rng, &bounds);
        max_len = max_len.max(w.len());
        ensure(w.len() <= 6, || format!("word too long: {w}"))?;
        let nf = normal_form(&w);
        ensure(nf.is_valid(), || format!("invalid normal form for {w}"))?;
        ensure(normal_form(&nf.to_word()) == nf, || format!("not idempotent on {w}"))?;
        ensure(is_identity(&w.concat(&w.inverse())), || format!("w·w⁻¹ ≠ 1 for {w}"))?;
        let p = random_point(&mut rng, 1 + i % 3, &bounds);
        ensure(w.act(&p).map_err(e2s)? == nf.to_word().act(&p).map_err(e2s)?, || format!("action differs on {w}"))?;
    }
    Ok(format!("200 words, max length {max_len}"))
}

fn must_stabilize(w: &Word, n: usize) -> Result<(), String> {
    let g = stabilizes_basepoint(w, n).map_err(e2s)?;
    let p0 = base_point(n);
    let image = w.act(&p0).map_err(e2s)?;
    match g {
        Some(c) if c.verifies(&image, &p0) => Ok(()),
        Some(_) => Err(format!("bad witness for {w}")),
        None => Err(format!("{w} should fix base_point({n})")),
    }
}

fn must_not_stabilize(w: &Word, n: usize) -> Result<(), String> {
    ensure(stabilizes_basepoint(w, n).map_err(e2s)?.is_none(), || format!("{w} should not fix base_point({n})"))
}

fn c4_stabilizers_n1() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0xA4);
    let bounds = WordBounds::default();
    for fam in [Family::A1, Family::B1, Family::U1] {
        for _ in 0..50 {
            must_stabilize(&fam.sample(&mut rng, &bounds), 1)?;
        }
    }
    for _ in 0..20 {
        // q(0) ≠ 0
        let mut q = random_poly(&mut rng, 3, 5).coeffs().to_vec();
        q.resize(4, Scalar::zero());
        q[0] = random_nonzero(&mut rng, 5);
        let w = psi(Polynomial::new(q)).concat(&scaling(random_nonzero(&mut rng, 5)));
        must_not_stabilize(&w, 1)?;
    }
    Ok("150 members, 20 violators".into())
}

fn c5_stabilizers_n2() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0xA5);
    let bounds = WordBounds::default();
    for fam in [Family::G2x, Family::G2y, Family::G2y1] {
        for _ in 0..50 {
            must_stabilize(&fam.sample(&mut rng, &bounds), 2)?;
        }
    }
    for _ in 0..50 {
        must_stabilize(&scaling(random_nonzero(&mut rng, 6)), 2)?;
    }
    let flat = |rng: &mut ChaCha8Rng| &random_poly(rng, 2, 4) * &Polynomial::monomial(int(1), 2);
    for _ in 0..20 {
        // q′(0) ≠ 0
        let t = random_nonzero(&mut rng, 4);
        must_not_stabilize(&psi(&flat(&mut rng) + &Polynomial::monomial(t.clone(), 1)), 2)?;
        must_not_stabilize(&phi(&flat(&mut rng) + &Polynomial::monomial(t, 1)), 2)?;
        // q(1) ≠ 0 while q(−1) = 0
        let q = &(&random_poly(&mut rng, 2, 4) * &Polynomial::from_i64(&[-1, 0, 1]))
            + &Polynomial::new(vec![random_nonzero(&mut rng, 4); 2]);
        must_not_stabilize(&phi_x().inverse().concat(&psi(q)).concat(&phi_x()), 2)?;
    }
    Ok("200 members, 60 perturbed".into())
}

fn c6_orbits_c2() -> Check {
    let s = sample_points(2, 500, 0xA6, &WordBounds::default()).map_err(e2s)?;
    let census: BTreeSet<usize> = s.points.iter().map(|p| orbit_tangent_dimension(Subgroup::U, p)).collect();
    ensure(census == BTreeSet::from([3, 4]), || format!("U-dimension census {census:?}"))?;
    let cls = classify(&s.points);
    let partition = |key: &dyn Fn(usize) -> String| {
        let mut m: BTreeMap<String, BTreeSet<usize>> = BTreeMap::new();
        for i in 0..cls.len() {
            m.entry(key(i)).or_default().insert(i);
        }
        m
    };
    let u = partition(&|i| format!("{}", cls[i].u));
    let b = partition(&|i| format!("{}", cls[i].b));
    let a = partition(&|i| format!("{}", cls[i].a));
    ensure(u.len() == 3, || format!("{} U-classes", u.len()))?;
    let mut dims: Vec<usize> = u.keys().map(|k| cls[*u[k].first().unwrap()].u.dim).collect();
    dims.sort_unstable();
    ensure(dims == [3, 3, 4], || format!("U-class dimensions {dims:?}"))?;
    // the classes agree with the tangent dimension of each member
    for (i, c) in cls.iter().enumerate() {
        ensure(orbit_tangent_dimension(Subgroup::U, &s.points[i]) == c.u.dim, || format!("point {i}"))?;
    }
    let ub: BTreeSet<&BTreeSet<usize>> = u.values().collect();
    let bb: BTreeSet<&BTreeSet<usize>> = b.values().collect();
    ensure(ub == bb, || "B-classes differ from U-classes".into())?;
    ensure(a.len() == 1, || format!("{} A-classes", a.len()))?;
    ensure(cls[0].a.dim == 4, || format!("A-dimension {}", cls[0].a.dim))?;
    let sizes: Vec<usize> = u.values().map(BTreeSet::len).collect();
    Ok(format!("500 points, U-class sizes {sizes:?}"))
}

fn c7_graphs() -> Check {
    let s1 = sample_points(1, 100, 0xA7, &WordBounds::default()).map_err(e2s)?;
    let g1 = build_orbit_graph(&s1).map_err(e2s)?;
    ensure(g1.a_vertices.len() == 1 && g1.b_vertices.len() == 1 && g1.edges.len() == 1, || {
        format!("n = 1: {}A/{}B/{}E", g1.a_vertices.len(), g1.b_vertices.len(), g1.edges.len())
    })?;
    ensure(g1.connected, || "n = 1 graph disconnected".into())?;
    let s2 = sample_points(2, 300, 0xA7, &WordBounds::default()).map_err(e2s)?;
    let g2 = build_orbit_graph(&s2).map_err(e2s)?;
    let (da, db) = g2.degrees();
    ensure(g2.a_vertices.len() == 1 && g2.b_vertices.len() == 3 && g2.edges.len() == 3, || {
        format!("n = 2: {}A/{}B/{}E", g2.a_vertices.len(), g2.b_vertices.len(), g2.edges.len())
    })?;
    ensure(da == [3] && db == [1, 1, 1], || format!("degrees {da:?} {db:?}"))?;
    ensure(g2.nonterminal_count() == 1, || format!("{} nonterminal", g2.nonterminal_count()))?;
    ensure(g2.connected, || "n = 2 graph disconnected".into())?;
    Ok("segment; star with 3 edges".into())
}

fn c8_presentations() -> Check {
    let want = [
        "A *_U B",
        "A₁ *_{U₁} B₁",
        "(G_{2,x} ⋊ C*) *_{C*} (G_{2,y} ⋊ C*) *_{Z₂} (G⁽¹⁾_{2,y} ⋊ Z₂)",
    ];
    for (n, w) in want.iter().enumerate() {
        let p = recorded_presentation(n).map_err(e2s)?;
        ensure(p.text == *w, || format!("n = {n}: {:?}", p.text))?;
        let g = gog_for_cn(n).map_err(e2s)?;
        ensure(g.is_connected(), || format!("n = {n}: disconnected"))?;
    }
    let loop_graph = GraphOfGroups {
        vertices: vec![Vertex { id: "v".into(), side: None, group: GroupDesc::trivial() }],
        edges: vec![Edge {
            id: "e".into(),
            from: "v".into(),
            to: "v".into(),
            group: GroupDesc::trivial(),
            a: Monomorphism::inclusion("1"),
            b: Monomorphism::inclusion("1"),
        }],
    };
    let p = fundamental_group_presentation(&loop_graph, &spanning_tree(&loop_graph).map_err(e2s)?).map_err(e2s)?;
    ensure(p.free_rank() == Some(1), || format!("loop: {:?}", p.text))?;
    Ok(format!("3 strings; loop gives {}", p.text))
}

fn c9_conjugacy_oracle() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0xA9);
    let bounds = WordBounds::default();
    let mut agree = 0;
    for i in 0..100 {
        let p = random_point(&mut rng, 2, &bounds);
        let q = if i < 50 {
            conjugate_point(&p, &random_invertible(&mut rng, 2))
        } else {
            loop {
                let q = random_point(&mut rng, 2, &bounds);
                if q.x().trace() != p.x().trace() || q.y().trace() != p.y().trace() {
                    break q;
                }
            }
        };
        let oracle = conjugate_2x2_oracle(&p, &q);
        let got = pgl_equivalent(&p, &q).map_err(e2s)?;
        ensure(oracle == (i < 50), || format!("oracle verdict {oracle} on instance {i}"))?;
        ensure(got.is_some() == oracle, || format!("disagreement on instance {i}"))?;
        if let Some(w) = got {
            ensure(w.verifies(&p, &q), || format!("witness fails on instance {i}"))?;
        }
        agree += 1;
    }
    Ok(format!("{agree}/100 agree"))
}

fn reduced(p: &CmPoint) -> Result<Option<Word>, String> {
    let r = reduce_to_basepoint(p, DEFAULT_BUDGET).map_err(e2s)?;
    let Some(w) = r.word else { return Ok(None) };
    // verify independently of the search
    let image = w.act(p).map_err(e2s)?;
    let ok = pgl_equivalent(&image, &base_point(p.n())).map_err(e2s)?.is_some();
    ensure(ok, || format!("unverified word {w}"))?;
    Ok(Some(w))
}

fn c10_transitivity() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0xAA);
    for _ in 0..100 {
        let p = CmPoint::new(
            Matrix::from_vec(1, vec![random_scalar(&mut rng, 20)]),
            Matrix::from_vec(1, vec![random_scalar(&mut rng, 20)]),
        )
        .map_err(e2s)?;
        let w = reduced(&p)?.ok_or_else(|| format!("no word for {p:?}"))?;
        ensure(is_translation_word(&w), || format!("{w} is not a translation"))?;
    }
    let s = sample_points(2, 100, 0xAA, &WordBounds { word_len: 3, ..WordBounds::default() }).map_err(e2s)?;
    let mut ok = 0;
    for p in &s.points {
        if reduced(p)?.is_some() {
            ok += 1;
        }
    }
    ensure(ok * 10 >= s.points.len() * 9, || format!("n = 2: {ok}/{}", s.points.len()))?;
    Ok(format!("C₁ 100/100; C₂ {ok}/{}", s.points.len()))
}

fn c11_infinitesimal() -> Check {
    let mut counts = Vec::new();
    for n in 1..=3 {
        let s = sample_points(n, 100, 0xAB + n as u64, &WordBounds::default()).map_err(e2s)?;
        for (i, p) in s.points.iter().enumerate() {
            let d = orbit_tangent_dimension(Subgroup::G0, p);
            ensure(d == 2 * n, || format!("n = {n}, point {i}: dimension {d}"))?;
        }
        counts.push(s.points.len());
    }
    Ok(format!("{counts:?} points for n = 1, 2, 3"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("base points", 1, c1_base_points),
        ("action soundness", 30, c2_action_soundness),
        ("word problem", 60, c3_word_problem),
        ("stabilizer families, n = 1", 10, c4_stabilizers_n1),
        ("stabilizer families, n = 2", 60, c5_stabilizers_n2),
        ("orbit structure on C₂", 600, c6_orbits_c2),
        ("orbit graphs", 600, c7_graphs),
        ("presentations", 1, c8_presentations),
        ("conjugacy oracle", 60, c9_conjugacy_oracle),
        ("transitivity", 600, c10_transitivity),
        ("infinitesimal transitivity", 300, c11_infinitesimal),
    ];
    let mut failed = 0;
    for (i, (name, limit, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let res = f();
        let took = start.elapsed();
        let verdict = match res {
            Ok(detail) if took <= Duration::from_secs(limit) => format!("PASS  {detail}"),
            Ok(detail) => format!("FAIL  over time limit ({detail})"),
            Err(e) => format!("FAIL  {e}"),
        };
        if verdict.starts_with("FAIL") {
            failed += 1;
        }
        println!("criterion {:>2} [{name}] {verdict} ({:.2}s, limit {limit}s)", i + 1, took.as_secs_f64());
    }
    println!("{} of 11 criteria passed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
