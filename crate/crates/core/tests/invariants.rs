//! Exhaustive window-scale invariants: semigroup axioms, the Green-relation
//! oracle equivalence, congruence classification against the saturation
//! oracle, and the closure-structure facts of the extension models.

use czx_core::congruence::{
    congruence_from_pairs, quotient_map, related, saturate_window, CongruenceSpec, Saturator,
};
use czx_core::cz::{
    bicyclic_embed, cz, green_related, index, inverse, is_idempotent, multiply,
    solve_translation, CzElement, GreenRelation, Side, Window,
};
use czx_core::ext::{
    classify, ext_inverse, ext_multiply, hom_to_ideal, universe, ElementClass, ExtElement,
    ModelSpec,
};
use czx_core::nbhd::{
    boundary_sets, dl_set, dl_set_closed_form, discreteness_witness, ext_idem_leq,
    idempotents_in_bounds, singleton_identity, upset_definitions, SingletonStatus,
};

fn m(x: CzElement, y: CzElement) -> CzElement {
    multiply(x, y).unwrap()
}

#[test]
fn associativity_exhaustive_window_6() {
    let w = Window::new(-6, 6).unwrap();
    let elems: Vec<CzElement> = w.iter().collect();
    for &x in &elems {
        for &y in &elems {
            let xy = m(x, y);
            for &z in &elems {
                assert_eq!(m(xy, z), m(x, m(y, z)), "assoc broke at {x} {y} {z}");
            }
        }
    }
}

#[test]
fn inverse_semigroup_axioms_window_6() {
    let w = Window::new(-6, 6).unwrap();
    let elems: Vec<CzElement> = w.iter().collect();
    for &x in &elems {
        let i = inverse(x);
        assert_eq!(m(m(x, i), x), x);
        assert_eq!(m(m(i, x), i), i);
    }
    for &x in &elems {
        for &y in &elems {
            assert_eq!(inverse(m(x, y)), m(inverse(y), inverse(x)));
            assert_eq!(
                index(m(x, y)).unwrap(),
                index(x).unwrap() + index(y).unwrap()
            );
        }
    }
    let idems: Vec<CzElement> = elems.iter().copied().filter(|x| is_idempotent(*x)).collect();
    for &e in &idems {
        for &f in &idems {
            let meet = czx_core::cz::idem_meet(e, f).unwrap();
            assert_eq!(m(e, f), meet);
            assert_eq!(m(f, e), meet);
        }
    }
}

#[test]
fn maximal_subgroups_are_trivial() {
    let w = Window::new(-5, 5).unwrap();
    for e in w.iter().filter(|x| is_idempotent(*x)) {
        for x in w.iter() {
            if m(x, inverse(x)) == e && m(inverse(x), x) == e && green_related(x, e, GreenRelation::H)
            {
                assert_eq!(x, e, "nontrivial subgroup member {x} at {e}");
            }
        }
    }
}

#[test]
fn bicyclic_embedding_is_injective_and_multiplicative() {
    let n = -2;
    let w = Window::new(-2, 4).unwrap();
    let corner: Vec<CzElement> = w.iter().filter(|x| x.a >= n && x.b >= n).collect();
    let mut images = std::collections::HashSet::new();
    for &x in &corner {
        assert!(images.insert(bicyclic_embed(n, x).unwrap()), "collision at {x}");
    }
    for &x in &corner {
        for &y in &corner {
            let p = m(x, y);
            if p.a < n || p.b < n {
                continue;
            }
            let lhs = bicyclic_embed(n, p).unwrap();
            let rhs = bicyclic_embed(n, x)
                .unwrap()
                .mul(bicyclic_embed(n, y).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

/// Reachability matrix over the search window: `can[i][j]` says some in-window
/// translation carries element `i` to element `j`. Built by the same
/// exhaustive scan `solve_translation` performs.
struct Reach {
    elems: Vec<CzElement>,
    can_right: Vec<bool>,
    can_left: Vec<bool>,
}

impl Reach {
    fn build(search: Window) -> Reach {
        let elems: Vec<CzElement> = search.iter().collect();
        let n = elems.len();
        let side = search.side_len();
        let lo = search.lo();
        let idx = |x: CzElement| -> Option<usize> {
            search
                .contains(x)
                .then(|| ((x.a - lo) * side + (x.b - lo)) as usize)
        };
        let mut can_right = vec![false; n * n];
        let mut can_left = vec![false; n * n];
        for (i, &x) in elems.iter().enumerate() {
            for &u in &elems {
                if let Some(j) = idx(m(x, u)) {
                    can_right[i * n + j] = true;
                }
                if let Some(j) = idx(m(u, x)) {
                    can_left[i * n + j] = true;
                }
            }
        }
        Reach {
            elems,
            can_right,
            can_left,
        }
    }

    fn id(&self, x: CzElement) -> usize {
        self.elems.binary_search(&x).expect("element in search window")
    }

    /// xS^1 = yS^1: equality stands in for the adjoined identity factor.
    fn oracle_r(&self, x: usize, y: usize) -> bool {
        let n = self.elems.len();
        x == y || (self.can_right[x * n + y] && self.can_right[y * n + x])
    }

    fn oracle_l(&self, x: usize, y: usize) -> bool {
        let n = self.elems.len();
        x == y || (self.can_left[x * n + y] && self.can_left[y * n + x])
    }
}

#[test]
fn green_characterization_matches_translation_oracle() {
    let w = Window::new(-5, 5).unwrap();
    let search = Window::new(-15, 15).unwrap();
    let reach = Reach::build(search);

    // the matrix is the same scan solve_translation runs; spot-check literally
    for (g, t) in [
        (cz(1, 9), cz(1, 5)),
        (cz(1, 0), cz(0, 0)),
        (cz(-3, 2), cz(-3, 2)),
        (cz(4, -5), cz(0, 0)),
    ] {
        let by_scan = solve_translation(g, t, Side::Right, search).unwrap().is_some();
        let n = reach.elems.len();
        assert_eq!(by_scan, reach.can_right[reach.id(g) * n + reach.id(t)]);
        let by_scan_l = solve_translation(g, t, Side::Left, search).unwrap().is_some();
        assert_eq!(by_scan_l, reach.can_left[reach.id(g) * n + reach.id(t)]);
    }

    let elems: Vec<CzElement> = w.iter().collect();
    let search_ids: Vec<usize> = reach.elems.iter().map(|&z| reach.id(z)).collect();
    for &x in &elems {
        for &y in &elems {
            let (xi, yi) = (reach.id(x), reach.id(y));
            let r = reach.oracle_r(xi, yi);
            let l = reach.oracle_l(xi, yi);
            assert_eq!(green_related(x, y, GreenRelation::R), r, "R at {x} {y}");
            assert_eq!(green_related(x, y, GreenRelation::L), l, "L at {x} {y}");
            assert_eq!(green_related(x, y, GreenRelation::H), r && l, "H at {x} {y}");
            let d = search_ids
                .iter()
                .any(|&z| reach.oracle_r(xi, z) && reach.oracle_l(z, yi));
            assert_eq!(green_related(x, y, GreenRelation::D), d, "D at {x} {y}");
            assert_eq!(green_related(x, y, GreenRelation::J), d, "J at {x} {y}");
        }
    }
}

#[test]
fn j_relation_matches_two_sided_oracle_at_small_scale() {
    let w = Window::new(-2, 2).unwrap();
    let search = Window::new(-6, 6).unwrap();
    let elems: Vec<CzElement> = w.iter().collect();
    let factors: Vec<CzElement> = search.iter().collect();
    let reach = |x: CzElement| -> std::collections::HashSet<CzElement> {
        let mut set = std::collections::HashSet::new();
        set.insert(x);
        for &u in &factors {
            set.insert(m(u, x));
            set.insert(m(x, u));
            for &v in &factors {
                set.insert(m(m(u, x), v));
            }
        }
        set
    };
    let reaches: Vec<_> = elems.iter().map(|&x| reach(x)).collect();
    for (i, &x) in elems.iter().enumerate() {
        for (j, &y) in elems.iter().enumerate() {
            let oracle = reaches[i].contains(&y) && reaches[j].contains(&x);
            assert_eq!(green_related(x, y, GreenRelation::J), oracle, "J at {x} {y}");
        }
    }
}

#[test]
fn congruence_property_and_quotient_homomorphism() {
    let w = Window::new(-4, 4).unwrap();
    let elems: Vec<CzElement> = w.iter().collect();
    for k in [0u64, 1, 2, 3, 5, 12] {
        let spec = CongruenceSpec::SigmaK(k);
        for &x in &elems {
            for &y in &elems {
                if related(spec, x, y).unwrap() {
                    for &u in &elems {
                        assert!(related(spec, m(x, u), m(y, u)).unwrap());
                        assert!(related(spec, m(u, x), m(u, y)).unwrap());
                    }
                }
            }
        }
        for &x in &elems {
            for &y in &elems {
                let lhs = quotient_map(k, m(x, y)).unwrap();
                let rhs = if k == 0 {
                    quotient_map(k, x).unwrap() + quotient_map(k, y).unwrap()
                } else {
                    (quotient_map(k, x).unwrap() + quotient_map(k, y).unwrap()).rem_euclid(k as i64)
                };
                assert_eq!(lhs, rhs, "quotient hom broke at k={k} {x} {y}");
            }
        }
    }
}

#[test]
fn saturation_is_sound_for_single_generators() {
    // every pair the oracle relates is related by the classified congruence
    let w = Window::new(-8, 8).unwrap();
    let sat = Saturator::new(w).unwrap();
    let mut scratch = sat.make_scratch();
    let box2: Vec<CzElement> = Window::new(-2, 2).unwrap().iter().collect();
    for &gx in &box2 {
        for &gy in &box2 {
            let gens = vec![(gx, gy)];
            let spec = congruence_from_pairs(&gens).unwrap();
            let p = sat.saturate_with(&gens, &mut scratch).unwrap();
            for &x in sat.elements() {
                for &y in sat.elements() {
                    if p.same_class(x, y).unwrap() {
                        assert!(
                            related(spec, x, y).unwrap(),
                            "unsound merge {x} ~ {y} for gens {gx} {gy}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn saturation_is_complete_on_the_inner_box() {
    // the oracle recovers the full classified partition away from the boundary
    let w = Window::new(-12, 12).unwrap();
    let sat = Saturator::new(w).unwrap();
    let mut scratch = sat.make_scratch();
    let inner: Vec<CzElement> = Window::new(-3, 3).unwrap().iter().collect();
    let gen_box: Vec<CzElement> = Window::new(-1, 1).unwrap().iter().collect();
    for &gx in &gen_box {
        for &gy in &gen_box {
            let gens = vec![(gx, gy)];
            let spec = congruence_from_pairs(&gens).unwrap();
            let p = sat.saturate_with(&gens, &mut scratch).unwrap();
            for &x in &inner {
                for &y in &inner {
                    assert_eq!(
                        p.same_class(x, y).unwrap(),
                        related(spec, x, y).unwrap(),
                        "partition mismatch at {x} {y} for gens {gx} {gy}"
                    );
                }
            }
        }
    }
}

#[test]
fn identifying_idempotents_reproduces_the_doubling_chain() {
    // (a,a) ~ (b,b) with a > b forces the arithmetic progression of step a-b
    let w = Window::new(0, 12).unwrap();
    let p = saturate_window(&[(cz(3, 1), cz(3, 1)), (cz(4, 4), cz(2, 2))], w).unwrap();
    let (a, b) = (4i64, 2i64);
    let d = a - b;
    let mut j = a;
    while j + d <= 12 {
        assert!(p.same_class(cz(j, j), cz(j + d, j + d)).unwrap(), "chain broke at {j}");
        j += d;
    }
}

#[test]
fn dl_sets_match_their_closed_form() {
    let w = Window::new(-8, 8).unwrap();
    for a in -4..=4 {
        for b in -4..=4 {
            assert_eq!(
                dl_set(a, b, w).unwrap(),
                dl_set_closed_form(a, b, w),
                "dl mismatch at ({a},{b})"
            );
            assert_eq!(
                singleton_identity(a, b, w).unwrap(),
                SingletonStatus::Holds,
                "singleton identity failed at ({a},{b})"
            );
        }
    }
}

#[test]
fn discreteness_witnesses_cover_qualifying_neighborhoods() {
    // deterministic sweep: each candidate set {(a,a), (x,y)} with a
    // qualifying offender must produce a valid witness
    for a in -3..=3 {
        for x in (a - 4)..=a {
            for y in (a - 4)..=a {
                if x == y {
                    continue;
                }
                let v = vec![cz(a, a), cz(x, y)];
                let w = discreteness_witness(a, &v)
                    .unwrap()
                    .expect("qualifying offender present");
                assert_eq!(w.offender, cz(x, y));
                match w.side {
                    Side::Left => {
                        assert_eq!(m(cz(a, a), w.offender), w.escape);
                        assert!(w.escape.b > a);
                    }
                    Side::Right => {
                        assert_eq!(m(w.offender, cz(a, a)), w.escape);
                        assert!(w.escape.a > a);
                    }
                }
                // the escape differs coordinatewise from every member on the
                // fixed row (left) or column (right)
                match w.side {
                    Side::Left => {
                        for u in v.iter().filter(|u| u.a == a) {
                            assert_ne!(u.b, w.escape.b, "escape hit a member: {u}");
                        }
                    }
                    Side::Right => {
                        for u in v.iter().filter(|u| u.b == a) {
                            assert_ne!(u.a, w.escape.a, "escape hit a member: {u}");
                        }
                    }
                }
            }
        }
    }
}

fn model_grid() -> Vec<ModelSpec> {
    vec![
        ModelSpec::plain_cz(),
        ModelSpec::s1(),
        ModelSpec::s2(1, 1).unwrap(),
        ModelSpec::s2(6, 2).unwrap(),
        ModelSpec::s3(),
        ModelSpec::s4(),
        ModelSpec::s5(2, 1).unwrap(),
        ModelSpec::s5(6, 3).unwrap(),
    ]
}

#[test]
fn extension_inverse_axioms() {
    let w = Window::new(-3, 3).unwrap();
    for spec in model_grid() {
        let elems = universe(&spec, w, 2).unwrap();
        for &x in &elems {
            let i = ext_inverse(&spec, x).unwrap();
            let xi = ext_multiply(&spec, x, i).unwrap();
            assert_eq!(ext_multiply(&spec, xi, x).unwrap(), x, "{spec}: axiom at {x:?}");
        }
        for &x in &elems {
            for &y in &elems {
                let lhs = ext_inverse(&spec, ext_multiply(&spec, x, y).unwrap()).unwrap();
                let rhs = ext_multiply(
                    &spec,
                    ext_inverse(&spec, y).unwrap(),
                    ext_inverse(&spec, x).unwrap(),
                )
                .unwrap();
                assert_eq!(lhs, rhs, "{spec}: antihomomorphism at {x:?} {y:?}");
            }
        }
    }
}

#[test]
fn ideal_absorbs_and_zero_is_central() {
    let w = Window::new(-3, 3).unwrap();
    for spec in model_grid().into_iter().filter(|s| s.has_ideal()) {
        let elems = universe(&spec, w, 2).unwrap();
        let zero = ExtElement::IdealGroup(0);
        for &x in &elems {
            assert_eq!(
                ext_multiply(&spec, x, zero).unwrap(),
                ext_multiply(&spec, zero, x).unwrap(),
                "{spec}: centrality at {x:?}"
            );
            for &i in &elems {
                if classify(&spec, i).unwrap() == ElementClass::IdealPart {
                    for p in [
                        ext_multiply(&spec, x, i).unwrap(),
                        ext_multiply(&spec, i, x).unwrap(),
                    ] {
                        assert_eq!(classify(&spec, p).unwrap(), ElementClass::IdealPart);
                    }
                }
            }
        }
    }
}

#[test]
fn hom_to_ideal_is_a_homomorphism_with_minimal_group_kernel() {
    let w = Window::new(-3, 3).unwrap();
    for spec in model_grid().into_iter().filter(|s| s.has_ideal()) {
        let elems = universe(&spec, w, 2).unwrap();
        for &x in &elems {
            for &y in &elems {
                let lhs = hom_to_ideal(&spec, ext_multiply(&spec, x, y).unwrap()).unwrap();
                let rhs = ext_multiply(
                    &spec,
                    hom_to_ideal(&spec, x).unwrap(),
                    hom_to_ideal(&spec, y).unwrap(),
                )
                .unwrap();
                assert_eq!(lhs, rhs, "{spec}: hom law at {x:?} {y:?}");
            }
        }
        // restricted to core elements the kernel is index equality
        for x in w.iter() {
            for y in w.iter() {
                let hx = hom_to_ideal(&spec, ExtElement::Cz(x)).unwrap();
                let hy = hom_to_ideal(&spec, ExtElement::Cz(y)).unwrap();
                assert_eq!(
                    hx == hy,
                    related(CongruenceSpec::SigmaK(0), x, y).unwrap(),
                    "{spec}: kernel mismatch at {x} {y}"
                );
            }
        }
    }
}

#[test]
fn boundary_partition_matches_classification() {
    let w = Window::new(-3, 3).unwrap();
    for spec in model_grid() {
        let b = boundary_sets(&spec, w, 2).unwrap();
        assert!(b.left_eq_right, "{spec}: L != R");
        assert!(b.ideal_absorbs, "{spec}: ideal fails to absorb");
        for x in &b.left {
            let c = classify(&spec, *x).unwrap();
            assert!(
                c == ElementClass::Unit || c == ElementClass::UnitGroupPart,
                "{spec}: unexpected boundary member {x:?}"
            );
        }
        for x in &b.ideal {
            assert_eq!(classify(&spec, *x).unwrap(), ElementClass::IdealPart);
        }
        let non_core = universe(&spec, w, 2)
            .unwrap()
            .into_iter()
            .filter(|x| !matches!(x, ExtElement::Cz(_)))
            .count();
        assert_eq!(b.left.len() + b.ideal.len(), non_core, "{spec}: partition leak");
    }
}

#[test]
fn idempotent_inventory_is_a_chain_with_the_stated_extremes() {
    let w = Window::new(-3, 3).unwrap();
    for spec in model_grid() {
        let idems = idempotents_in_bounds(&spec, w, 2).unwrap();
        // totally ordered under the extended natural order
        for &e in &idems {
            for &f in &idems {
                let le = ext_idem_leq(&spec, e, f).unwrap();
                let ge = ext_idem_leq(&spec, f, e).unwrap();
                assert!(le || ge, "{spec}: incomparable idempotents {e:?} {f:?}");
                if le && ge {
                    assert_eq!(e, f);
                }
            }
        }
        if spec.has_ideal() {
            for &e in &idems {
                assert!(ext_idem_leq(&spec, ExtElement::IdealGroup(0), e).unwrap());
            }
        }
        if spec.has_adjoined_unit() {
            for &e in &idems {
                assert!(ext_idem_leq(&spec, e, ExtElement::AdjoinedUnit).unwrap());
            }
        }
    }
}

#[test]
fn upset_matches_its_core_closed_form() {
    let w = Window::new(-4, 4).unwrap();
    for spec in model_grid() {
        for a in -2..=2i64 {
            for b in -2..=2i64 {
                let sets = upset_definitions(&spec, a, b, w, 2).unwrap();
                assert_eq!(sets[0], sets[1], "{spec} at ({a},{b})");
                assert_eq!(sets[0], sets[2], "{spec} at ({a},{b})");
                // core members obey x - y = a - b, y <= b
                for e in &sets[0] {
                    if let ExtElement::Cz(p) = e {
                        assert_eq!(p.a - p.b, a - b);
                        assert!(p.b <= b);
                    }
                }
            }
        }
    }
}
