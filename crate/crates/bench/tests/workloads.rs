use gsforge_bench::*;
use gsforge_core::{certify, certify_series, GsStatus};

#[test]
fn workloads_are_well_formed() {
    assert_eq!(
        certify(&presentation(EXTENDED)).unwrap().status,
        GsStatus::Gs
    );
    assert_eq!(certify(&presentation(A1)).unwrap().status, GsStatus::NotWgs);
    assert!(presentation(COMMUTATOR).relations().len() == 3);
    assert!(file(D_FAMILY).limit_spec().has_infinite_tail());
}

#[test]
fn long_series_is_gs() {
    let c = certify_series(&long_series(30), 60).unwrap();
    assert_eq!(c.status, GsStatus::Gs);
    assert_eq!(c.negativity_set.component_count(), 1);
}
