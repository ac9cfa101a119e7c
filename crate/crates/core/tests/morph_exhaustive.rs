use clifford_morph::morph::{
    apply_plan, base_table, plan_signature_change, tilt_table, vee_table, verify_isomorphism, ProductTable,
};
use clifford_morph::{Sign, Signature};

fn from_mask(n: usize, neg: u32) -> Signature {
    let squares = (0..n).map(|i| if neg >> i & 1 == 1 { Sign::Minus } else { Sign::Plus }).collect();
    Signature::from_squares(squares).unwrap()
}

fn patterns(n: usize) -> impl Iterator<Item = Signature> {
    (0..1u32 << n).map(move |neg| from_mask(n, neg))
}

fn assert_same(left: &ProductTable, right: &ProductTable, what: &str) {
    let report = verify_isomorphism(left, right).unwrap();
    assert!(report.equal, "{what}: {:?}", report.first_mismatch);
    assert_eq!(report.pairs_checked, left.blade_count() * left.blade_count());
}

#[test]
fn vee_simulates_the_flipped_signature() {
    for n in 1..=5 {
        for sig in patterns(n) {
            let base = base_table(&sig);
            for mu in 0..n {
                let vee = vee_table(&base, mu).unwrap();
                assert_same(&vee, &base_table(&sig.flipped_except(mu)), &format!("{sig} vee({mu})"));
            }
        }
    }
}

#[test]
fn tilt_is_the_opposite_algebra() {
    for n in 1..=5 {
        for sig in patterns(n) {
            assert_same(&tilt_table(&base_table(&sig)), &base_table(&sig.flipped()), &format!("{sig} tilt"));
        }
    }
}

#[test]
fn both_morphisms_are_involutions() {
    for n in 1..=5 {
        for sig in patterns(n) {
            let base = base_table(&sig);
            assert_same(&tilt_table(&tilt_table(&base)), &base, "tilt twice");
            for mu in 0..n {
                let twice = vee_table(&vee_table(&base, mu).unwrap(), mu).unwrap();
                assert_same(&twice, &base, "vee twice");
            }
        }
    }
}

#[test]
fn planned_chains_reach_their_target() {
    // Small deterministic LCG so the pairs do not depend on any crate.
    let mut state = 0x2545_f491_4f6c_dd1du64;
    let mut next = |bound: u32| {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((state >> 33) as u32) % bound
    };
    for n in [4, 5, 6] {
        for _ in 0..50 {
            let src = from_mask(n, next(1 << n));
            let dst = from_mask(n, next(1 << n));
            let plan = plan_signature_change(&src, &dst).unwrap();
            let table = apply_plan(&base_table(&src), &plan).unwrap();
            assert_same(&table, &base_table(&dst), &format!("{src} -> {dst} via {plan}"));
        }
    }
}

#[test]
fn lazy_tables_agree_with_their_targets_on_samples() {
    let sig = Signature::with_limit(5, 5, 12).unwrap();
    let base = base_table(&sig);
    let vee = vee_table(&base, 3).unwrap();
    let target = base_table(&sig.flipped_except(3));
    assert!(!vee.is_dense());
    for a in (0..1024u32).step_by(37) {
        for b in (0..1024u32).step_by(41) {
            let (a, b) = (clifford_morph::Blade(a), clifford_morph::Blade(b));
            assert_eq!(vee.entry(a, b), target.entry(a, b));
        }
    }
}
