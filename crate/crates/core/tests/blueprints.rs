use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use racks::construction::{
    build_rack, check_blueprint, realize_operator_group, regular_action_respects_law, MultTable,
    RackBlueprint,
};
use racks::rack::{operator_group, translation};
use racks::subgroups::subgroup_classes;
use racks::{validate, Kind, PermGroup, Permutation};

fn centralizing(g: &PermGroup, a: usize) -> Vec<Permutation> {
    let stab = g.stabilizer(a).unwrap();
    g.elements()
        .iter()
        .filter(|p| stab.elements().iter().all(|s| s.then(p) == p.then(s)))
        .cloned()
        .collect()
}

fn random_blueprints(seed: u64, count: usize) -> Vec<RackBlueprint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=5);
            let g = subgroup_classes(n, 6).unwrap().choose(&mut rng).unwrap().clone();
            let pis = g
                .orbit_data()
                .representatives
                .clone()
                .into_iter()
                .map(|a| centralizing(&g, a).choose(&mut rng).unwrap().clone())
                .collect();
            RackBlueprint::new(g, pis).unwrap()
        })
        .collect()
}

#[test]
fn flags_match_validation() {
    for b in random_blueprints(11, 200) {
        let t = build_rack(&b);
        let class = validate(&t);
        let flags = check_blueprint(&b).unwrap();
        assert!(class.is_rack());
        assert_eq!(flags.quandle_ok, class.satisfies(Kind::Quandle));
        assert_eq!(flags.kei_ok, class.satisfies(Kind::Kei));
    }
}

#[test]
fn condition_b_iff_operator_group_is_g() {
    let mut seen = [false; 2];
    for b in random_blueprints(12, 200) {
        let t = build_rack(&b);
        let same = operator_group(&t).unwrap() == *b.group();
        assert_eq!(check_blueprint(&b).unwrap().condition_b, same);
        seen[same as usize] = true;
    }
    assert_eq!(seen, [true, true]);
}

#[test]
fn translations_do_not_depend_on_transversal() {
    for b in random_blueprints(13, 100) {
        let t = build_rack(&b);
        for g in b.group().elements() {
            for (&a, pi) in b.reps().iter().zip(b.pis()) {
                assert_eq!(translation(&t, g.apply(a)).unwrap(), g.inverse().then(pi).then(g));
            }
        }
    }
}

#[test]
fn condition_a_is_enforced() {
    let g = PermGroup::symmetric(3).unwrap();
    let bad = Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap();
    assert!(RackBlueprint::new(g, vec![bad]).is_err());
}

fn cyclic(m: usize) -> MultTable {
    let data = (0..m * m).map(|i| ((i / m + i % m) % m) as u32).collect();
    MultTable::new(m, data).unwrap()
}

#[test]
fn realized_groups_act_as_operator_groups() {
    for m in [2, 3, 4, 5] {
        let mt = cyclic(m);
        let t = realize_operator_group(&mt, None).unwrap();
        assert!(validate(&t).satisfies(Kind::Quandle));
        assert!(regular_action_respects_law(&mt, &t).unwrap());
        assert_eq!(operator_group(&t).unwrap().order(), m);
    }
    let s3 = MultTable::from_perm_group(&PermGroup::symmetric(3).unwrap()).unwrap();
    let t = realize_operator_group(&s3, None).unwrap();
    assert!(regular_action_respects_law(&s3, &t).unwrap());
}

#[test]
fn realize_requires_full_normal_closure() {
    let mt = cyclic(6);
    // the element 2 generates the index-2 subgroup
    assert!(realize_operator_group(&mt, Some(&[2])).is_err());
    assert!(realize_operator_group(&mt, Some(&[1])).is_ok());
}
