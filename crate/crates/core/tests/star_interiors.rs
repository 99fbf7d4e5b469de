use num_traits::Signed;
use tangles::generators::gen_grid;
use tangles::inducers::{min_star_interior, star_interior_inducer, star_interior_search, WeightFunction};
use tangles::orientations::{is_profile, is_regular};
use tangles::Error;

#[test]
fn grid_low_order_profile_yields_an_inducing_set() {
    let tau = gen_grid(5, 1 << 20).unwrap().orientation.restrict_to_order(4).unwrap();
    assert!(is_regular(&tau) && is_profile(&tau));
    let found = star_interior_search(&tau, 2).unwrap();
    assert!(found.set.count() >= 4);
    let w = WeightFunction::indicator(&found.set);
    for s in tau.elements().iter().filter(|s| s.separator().count() < 2) {
        assert!(w.margin(s).is_positive(), "{s:?}");
    }
    // the grid system is not all separations of a 25-set
    assert!(matches!(star_interior_inducer(&tau, 2), Err(Error::Input(_))));
}

#[test]
fn grid_order_two_profile_stars_are_large() {
    let tau = gen_grid(5, 1 << 20).unwrap().orientation.restrict_to_order(2).unwrap();
    let min = min_star_interior(&tau, 1 << 24).unwrap();
    assert!(min.interior.count() >= 2, "interior {:?}", min.interior);
}
