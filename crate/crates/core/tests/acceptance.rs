//! One test per acceptance criterion, so `cargo test` reports each as its own
//! pass/fail line. Run with `--nocapture` to see the details.

use bs_tiling::acceptance::run_criterion;

const SEED: u64 = 20_240_601;

fn check(id: u8) {
    let report = run_criterion(id, SEED).expect("known criterion");
    println!("{report}");
    assert!(report.passed, "{report}");
}

macro_rules! criteria {
    ($($name:ident = $id:literal;)*) => {
        $(
            #[test]
            fn $name() {
                check($id);
            }
        )*
    };
}

criteria! {
    criterion_01_multiplying_tilesets = 1;
    criterion_02_orbit_configurations = 2;
    criterion_03_weak_period = 3;
    criterion_04_tile_identities = 4;
    criterion_05_dynamics = 5;
    criterion_06_substitutions = 6;
    criterion_07_substitution_tileset = 7;
    criterion_08_bsnn_subgroup = 8;
    criterion_09_group_normal_forms = 9;
    criterion_10_balanced_representation = 10;
}
