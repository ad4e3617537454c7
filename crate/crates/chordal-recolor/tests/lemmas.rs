mod common;

use chordal_recolor::buffer::{
    border_distance, check_validity, construct_valid_tuple, is_vectorially_proper, swap_coordinates,
    BufferParams, ColorVector, RegionKind, Tuple, Validity,
};
use chordal_recolor::engine::{unify_tuples, VectorLab, STEP3_CONSTANT};
use proptest::prelude::*;

use common::{after_transpositions, random_vector, Lcg};

type Pair = (usize, usize);
type Program = (Vec<Option<Pair>>, Vec<Option<(usize, u32)>>);

/// Tuple from an explicit program: transpositions on `R_2..R_s` (entry `j - 2` for
/// `R_j`), color regions `(class, color)` on `R_{s+1}..R_{N-1}`.
fn build(p: &BufferParams, trans: &[Option<Pair>], colors: &[Option<(usize, u32)>], flip: bool) -> Tuple {
    assert_eq!(trans.len(), p.s - 1);
    assert_eq!(colors.len(), p.n_regions - p.s - 1);
    let (z, z2) = p.temps();
    let (z, z2) = if flip { (z2, z) } else { (z, z2) };
    let mut cur = ColorVector::canonical(p.omega);
    let mut vecs = vec![cur.clone(); 3];
    for t in trans {
        match *t {
            None => vecs.extend([cur.clone(), cur.clone(), cur.clone()]),
            Some((a, b)) => {
                let mut mid = cur.clone();
                mid.set(a, z);
                mid.set(b, z2);
                let next = swap_coordinates(&cur, a, b);
                vecs.extend([cur.clone(), mid, next.clone()]);
                cur = next;
            }
        }
    }
    for c in colors {
        match *c {
            None => vecs.extend([cur.clone(), cur.clone(), cur.clone()]),
            Some((a, col)) => {
                let mut next = cur.clone();
                next.set(a, col);
                vecs.extend([cur.clone(), next.clone(), next.clone()]);
                cur = next;
            }
        }
    }
    vecs.extend([cur.clone(), cur.clone(), cur]);
    Tuple { vecs }
}

fn random_pair(rng: &mut Lcg, omega: usize) -> Pair {
    let a = 1 + rng.below(omega);
    let b = 1 + (a + rng.below(omega - 1)) % omega;
    (a, b)
}

/// Random valid tuple whose top vector is `top`. With `almost`, `R_s` carries a
/// transposition too.
fn random_with_top(rng: &mut Lcg, p: &BufferParams, top: &ColorVector, almost: bool) -> Tuple {
    let w = p.omega;
    let slots = p.s - 2;
    let noncanon: Vec<usize> = (1..=w).filter(|&c| !p.is_canonical_color(top.at(c))).collect();
    // Canonical colors left for the classes that later turn non-canonical.
    let mut free: Vec<u32> = (1..=w as u32).filter(|&c| !top.contains(c)).collect();
    for i in (1..free.len()).rev() {
        free.swap(i, rng.below(i + 1));
    }
    let mut perm = top.clone();
    for (&q, &c) in noncanon.iter().zip(&free) {
        perm.set(q, c);
    }
    let mut pairs = Vec::new();
    let mut cur = ColorVector::canonical(w);
    if w >= 2 {
        let budget = slots - (w - 1) - usize::from(almost);
        for _ in 0..rng.below(budget + 1) {
            let (a, b) = random_pair(rng, w);
            pairs.push((a, b));
            cur = swap_coordinates(&cur, a, b);
        }
        // The last transposition before R_s, when `almost`, must be in R_s itself.
        let mut tail = Vec::new();
        let mut goal = perm.clone();
        if almost {
            let (a, b) = random_pair(rng, w);
            tail.push((a, b));
            goal = swap_coordinates(&goal, a, b);
        }
        while let Some(a) = (1..=w).find(|&a| cur.at(a) != goal.at(a)) {
            let b = cur.class_of(goal.at(a)).unwrap();
            pairs.push((a, b));
            cur = swap_coordinates(&cur, a, b);
        }
        pairs.extend(tail);
    }
    let mut trans = vec![None; p.s - 1];
    let (body, rs) = if almost { (&pairs[..pairs.len() - 1], pairs.last().copied()) } else { (&pairs[..], None) };
    let mut idx: Vec<usize> = (0..slots).collect();
    for i in (1..idx.len()).rev() {
        idx.swap(i, rng.below(i + 1));
    }
    let mut chosen: Vec<usize> = idx[..body.len()].to_vec();
    chosen.sort();
    for (slot, &pair) in chosen.into_iter().zip(body) {
        trans[slot] = Some(pair);
    }
    trans[slots] = rs;
    let cslots = p.n_regions - p.s - 1;
    let mut colors = vec![None; cslots];
    let mut cidx: Vec<usize> = (0..cslots).collect();
    for i in (1..cidx.len()).rev() {
        cidx.swap(i, rng.below(i + 1));
    }
    let mut chosen: Vec<usize> = cidx[..noncanon.len()].to_vec();
    chosen.sort();
    let mut order = noncanon.clone();
    for i in (1..order.len()).rev() {
        order.swap(i, rng.below(i + 1));
    }
    for (slot, q) in chosen.into_iter().zip(order) {
        colors[slot] = Some((q, top.at(q)));
    }
    let t = build(p, &trans, &colors, rng.below(2) == 1);
    assert_eq!(t.top(), top);
    t
}

fn params(rng: &mut Lcg) -> BufferParams {
    let w = 2 + rng.below(3);
    BufferParams::new(w, 1 + rng.below(3), w + 3 + rng.below(3)).unwrap()
}

#[test]
fn builder_produces_valid_tuples() {
    let mut rng = Lcg(5);
    for _ in 0..500 {
        let p = params(&mut rng);
        let top = random_vector(&mut rng, p.omega, p.k);
        let t = random_with_top(&mut rng, &p, &top, false);
        assert_eq!(check_validity(&t, &p), Validity::Valid, "\n{}", t.dump(p.omega));
        let t = random_with_top(&mut rng, &p, &top, true);
        assert_eq!(check_validity(&t, &p), Validity::AlmostValid, "\n{}", t.dump(p.omega));
    }
}

fn p3() -> BufferParams {
    BufferParams::new(3, 2, 6).unwrap()
}

fn none(p: &BufferParams) -> Program {
    (vec![None; p.s - 1], vec![None; p.n_regions - p.s - 1])
}

#[test]
fn choose_temporary_restores_shared_temps() {
    let p = BufferParams::new(3, 2, 7).unwrap();
    let mut t = construct_valid_tuple(&ColorVector(vec![2, 1, 3]), &p);
    t.vecs[BufferParams::b(2)].set(2, 7);
    assert!(matches!(t.kind(2, 3), RegionKind::Transposition { z: 4, z2: 7, .. }));
    let mut lab = VectorLab::new(p, t, &[]);
    lab.choose_temporary(2).unwrap();
    assert!(matches!(lab.tuple().kind(2, 3), RegionKind::Transposition { z: 4, z2: 5, .. }));
    assert!(lab.worst <= 1);
    assert_eq!(check_validity(lab.tuple(), &p), Validity::Valid);
}

#[test]
fn transp_shift_example() {
    let p = p3();
    let (mut tr, cl) = none(&p);
    tr[1] = Some((1, 2));
    let t = build(&p, &tr, &cl, false);
    assert!(t.kind(2, 3).is_waiting() && t.kind(3, 3).is_transposition());
    let mut lab = VectorLab::new(p, t.clone(), &[]);
    lab.transp_shift(2).unwrap();
    let after = lab.tuple().clone();
    assert_eq!(after.kind(2, 3).transposed_classes(), Some((1, 2)));
    assert!(after.kind(3, 3).is_waiting());
    let (a, b, c) = after.region(3);
    assert!([a, b, c].iter().all(|x| x.0 == vec![2, 1, 3]));
    assert_eq!(after.vecs[BufferParams::a(2)], t.vecs[BufferParams::a(2)]);
    assert_eq!(after.vecs[BufferParams::c(3)], t.vecs[BufferParams::c(3)]);
    assert!(lab.worst <= 2);

    lab.shift_right(2).unwrap();
    assert!(lab.worst <= 2);
    assert_eq!(lab.tuple(), &t);
}

#[test]
fn transp_cancel_examples() {
    let p = p3();
    for gap in [1, 4] {
        let (mut tr, cl) = none(&p);
        tr[0] = Some((1, 3));
        tr[gap] = Some((1, 3));
        let mut lab = VectorLab::new(p, build(&p, &tr, &cl, false), &[]);
        lab.transp_cancel(2, 2 + gap).unwrap();
        assert!(lab.worst <= 2);
        assert_eq!(lab.tuple(), &construct_valid_tuple(&ColorVector::canonical(3), &p));
    }
    // Around another transposition the cancelled colors trade places in between.
    let (mut tr, cl) = none(&p);
    tr[0] = Some((1, 2));
    tr[1] = Some((2, 3));
    tr[2] = Some((1, 3));
    let t = build(&p, &tr, &cl, false);
    let mut lab = VectorLab::new(p, t.clone(), &[]);
    lab.transp_cancel(2, 4).unwrap();
    let u = lab.tuple();
    assert!(u.kind(2, 3).is_waiting() && u.kind(4, 3).is_waiting());
    assert!(u.kind(3, 3).is_transposition());
    assert_eq!(after_transpositions(u, &p), after_transpositions(&t, &p));
    assert!(lab.worst <= 2);
}

#[test]
fn insert_transposition_keeps_product() {
    let p = p3();
    let (tr, cl) = none(&p);
    let t = build(&p, &tr, &cl, false);
    let mut lab = VectorLab::new(p, t.clone(), &[]);
    lab.insert_transposition(3, 4, 1, 3).unwrap();
    let u = lab.tuple();
    assert_eq!(u.kind(3, 3).transposed_classes(), Some((1, 3)));
    assert_eq!(u.kind(4, 3).transposed_classes(), Some((1, 3)));
    assert_eq!(u.vecs[BufferParams::a(3)], t.vecs[BufferParams::a(3)]);
    assert_eq!(u.vecs[BufferParams::c(4)], t.vecs[BufferParams::c(4)]);
    assert!(lab.worst <= 2);

    lab.insert_transposition(5, 9, 2, 3).unwrap();
    assert!((6..9).all(|j| lab.tuple().kind(j, 3).is_waiting()));
    assert_eq!(after_transpositions(lab.tuple(), &p), after_transpositions(&t, &p));
    assert_eq!(check_validity(lab.tuple(), &p), Validity::Valid);
}

#[test]
fn move_color_region_examples() {
    let p = p3();
    let (tr, mut cl) = none(&p);
    cl[0] = Some((2, 6));
    let t = build(&p, &tr, &cl, false);
    let s = p.s;
    let mut lab = VectorLab::new(p, t.clone(), &[]);
    lab.move_color_region(s + 1, s + 1).unwrap();
    assert_eq!(lab.tuple(), &t);
    lab.move_color_region(s + 1, s + 3).unwrap();
    assert!(lab.worst <= 1);
    assert!(lab.tuple().kind(s + 1, 3).is_waiting());
    assert_eq!(lab.tuple().kind(s + 3, 3), RegionKind::Color { p: 2, c1: 2, z: 6 });
    assert_eq!(lab.tuple().top(), t.top());

    // Exchange with another color region.
    let (tr, mut cl) = none(&p);
    cl[0] = Some((2, 6));
    cl[2] = Some((1, 4));
    let t = build(&p, &tr, &cl, false);
    let mut lab = VectorLab::new(p, t.clone(), &[]);
    lab.move_color_region(s + 1, s + 3).unwrap();
    assert!(lab.worst <= 1);
    assert_eq!(lab.tuple().kind(s + 1, 3), RegionKind::Color { p: 1, c1: 1, z: 4 });
    assert_eq!(lab.tuple().kind(s + 3, 3), RegionKind::Color { p: 2, c1: 2, z: 6 });
    assert_eq!(lab.tuple().top(), t.top());
    assert_eq!(check_validity(lab.tuple(), &p), Validity::Valid);
}

#[test]
fn switch_transpo_cases() {
    let p = BufferParams::new(4, 2, 7).unwrap();
    let cases: [(Option<Pair>, Pair, usize); 4] = [
        (None, (1, 2), 1),
        (Some((1, 2)), (1, 2), 2),
        (Some((1, 2)), (2, 3), 2),
        (Some((1, 2)), (3, 4), 3),
    ];
    for (left, right, a) in cases {
        let (mut tr, cl) = none(&p);
        tr[2] = left;
        tr[3] = Some(right);
        let t = build(&p, &tr, &cl, false);
        let mut lab = VectorLab::new(p, t.clone(), &[]);
        let cancelled = lab.switch_transpo(4, a).unwrap();
        let u = lab.tuple();
        assert!(lab.worst <= 4, "{left:?} {right:?}: {}", lab.worst);
        assert_eq!(cancelled, left == Some(right));
        let r = u.kind(5, 4).transposed_classes();
        assert!(r.is_none_or(|(x, y)| x != a && y != a), "{left:?} {right:?} -> {r:?}");
        let l = u.kind(4, 4).transposed_classes();
        assert!(l.is_none_or(|(x, y)| x == a || y == a));
        assert_eq!(u.vecs[BufferParams::a(4)], t.vecs[BufferParams::a(4)]);
        assert_eq!(u.vecs[BufferParams::c(5)], t.vecs[BufferParams::c(5)]);
        assert_eq!(check_validity(u, &p), Validity::Valid);
    }
}

#[test]
fn cancel_identity_segments() {
    let p = BufferParams::new(3, 2, 6).unwrap();
    let progs: [&[Pair]; 3] = [
        &[(1, 2), (1, 2)],
        &[(1, 2), (2, 3), (2, 3), (1, 2)],
        &[(1, 2), (2, 3), (1, 2), (1, 3)],
    ];
    for prog in progs {
        let (mut tr, cl) = none(&p);
        for (i, &x) in prog.iter().enumerate() {
            tr[1 + 2 * i] = Some(x);
        }
        let t = build(&p, &tr, &cl, false);
        assert_eq!(after_transpositions(&t, &p), &ColorVector::canonical(3), "{prog:?}");
        let mut lab = VectorLab::new(p, t, &[]);
        lab.cancel_identity_segment(2, p.s - 1).unwrap();
        assert!((2..p.s).all(|j| lab.tuple().kind(j, 3).is_waiting()), "{prog:?}");
        assert!(lab.worst <= STEP3_CONSTANT * 9);
    }
}

#[test]
fn make_well_organized_clears_the_front() {
    let mut rng = Lcg(17);
    for _ in 0..300 {
        let p = params(&mut rng);
        let top = random_vector(&mut rng, p.omega, p.k);
        let t = random_with_top(&mut rng, &p, &top, false);
        let mut lab = VectorLab::new(p, t.clone(), &[]);
        lab.make_well_organized().unwrap();
        let u = lab.tuple();
        assert!((2..2 + 2 * p.big_omega).all(|j| u.kind(j, p.omega).is_waiting()), "\n{}", u.dump(p.omega));
        assert_eq!(check_validity(u, &p), Validity::Valid);
        assert_eq!(after_transpositions(u, &p), after_transpositions(&t, &p));
        assert!(lab.worst as usize <= 12 * p.big_omega.max(1));
    }
}

#[test]
fn step2_on_full_transposition_buffer() {
    let p = BufferParams::new(3, 2, 6).unwrap();
    let mut rng = Lcg(23);
    for _ in 0..200 {
        let mut tr = vec![None; p.s - 1];
        for t in tr.iter_mut() {
            *t = Some(random_pair(&mut rng, 3));
        }
        let cl = vec![None; p.n_regions - p.s - 1];
        let t = build(&p, &tr, &cl, rng.below(2) == 0);
        assert_eq!(check_validity(&t, &p), Validity::AlmostValid);
        let mut lab = VectorLab::new(p, t.clone(), &[]);
        lab.step2().unwrap();
        assert!(lab.worst <= 6);
        assert_eq!(check_validity(lab.tuple(), &p), Validity::Valid);
        assert_eq!(lab.tuple().vecs[BufferParams::a(p.s + 1)..], t.vecs[BufferParams::a(p.s + 1)..]);
    }
}

#[test]
fn step2_examples() {
    let p = p3();
    let t = construct_valid_tuple(&ColorVector(vec![3, 1, 2]), &p);
    let mut lab = VectorLab::new(p, t.clone(), &[]);
    lab.step2().unwrap();
    assert_eq!(lab.tuple(), &t);
    assert_eq!(lab.worst, 0);

    let (mut tr, cl) = none(&p);
    tr[p.s - 2] = Some((1, 2));
    let mut lab = VectorLab::new(p, build(&p, &tr, &cl, false), &[]);
    lab.step2().unwrap();
    assert!(lab.tuple().kind(p.s - 1, 3).is_transposition());
    assert!(lab.tuple().kind(p.s, 3).is_waiting());
}

/// Step 1 and step 2 alternated from random valid tuples toward random targets.
/// Returns the number of step-1 invocations.
fn border_rounds(seed: u64, cases: usize) -> usize {
    let mut rng = Lcg(seed);
    let mut calls = 0;
    for _ in 0..cases {
        let p = params(&mut rng);
        let top = random_vector(&mut rng, p.omega, p.k);
        let target = random_vector(&mut rng, p.omega, p.k);
        let t = random_with_top(&mut rng, &p, &top, false);
        // Classes on which top and target agree may be marked external.
        let external: Vec<usize> = (1..=p.omega)
            .filter(|&q| top.at(q) == target.at(q) && rng.below(2) == 0)
            .collect();
        let mut lab = VectorLab::new(p, t, &external);
        loop {
            let before = lab.tuple().clone();
            let d = border_distance(before.top(), &target);
            if d == 0 {
                break;
            }
            lab.step1(&target).unwrap();
            calls += 1;
            let after = lab.tuple();
            assert!(lab.worst <= 3, "step1 changed a coordinate {} times", lab.worst);
            assert!(border_distance(after.top(), &target) < d);
            assert!(matches!(check_validity(after, &p), Validity::Valid | Validity::AlmostValid));
            assert!(is_vectorially_proper(&after.vecs));
            assert_eq!(after.vecs[..BufferParams::a(p.s)], before.vecs[..BufferParams::a(p.s)]);
            for &q in &external {
                assert_eq!(after.top().at(q), before.top().at(q));
            }
            let mid = after.clone();
            lab.step2().unwrap();
            assert!(lab.worst <= 6, "step2 changed a coordinate {} times", lab.worst);
            assert_eq!(check_validity(lab.tuple(), &p), Validity::Valid);
            assert_eq!(lab.tuple().vecs[BufferParams::a(p.s + 1)..], mid.vecs[BufferParams::a(p.s + 1)..]);
        }
    }
    calls
}

#[test]
fn step1_and_step2_budgets() {
    assert!(border_rounds(1, 600) >= 1000);
}

#[test]
fn unify_examples() {
    let p = p3();
    let t = construct_valid_tuple(&ColorVector(vec![2, 6, 1]), &p);
    let (u, worst) = unify_tuples(p, vec![t.clone()]).unwrap();
    assert_eq!((u, worst), (t.clone(), 0));
    let (u, _) = unify_tuples(p, vec![t.clone(), t.clone()]).unwrap();
    assert_eq!(check_validity(&u, &p), Validity::Valid);
    assert_eq!(u.top(), t.top());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]
    #[test]
    fn unify_random_children(seed in any::<u64>(), children in 2usize..5) {
        let mut rng = Lcg(seed);
        let p = params(&mut rng);
        let top = random_vector(&mut rng, p.omega, p.k);
        let tuples: Vec<Tuple> = (0..children).map(|_| random_with_top(&mut rng, &p, &top, false)).collect();
        let (u, worst) = unify_tuples(p, tuples).unwrap();
        prop_assert_eq!(check_validity(&u, &p), Validity::Valid);
        prop_assert_eq!(u.top(), &top);
        prop_assert!(worst as usize <= STEP3_CONSTANT as usize * p.omega * p.omega);
    }
}
