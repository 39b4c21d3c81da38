use jones_core::expansion::delta_k;
use jones_core::quotients::{
    cyclic_order_degree1, cyclic_order_degree2, cyclic_order_in, orbit_lattice_degree1,
    order_by_denominators, order_in, CyclicOrder, RationalLattice,
};
use jones_core::words::GroupWord;
use num_bigint::BigInt;

fn psi0_delta1() -> Vec<num_rational::BigRational> {
    delta_k(&GroupWord::psi0(), 1)
        .unwrap()
        .matrix
        .entries()
        .to_vec()
}

#[test]
fn degree1_order_is_ten() {
    let r = cyclic_order_degree1(6, 200).unwrap();
    assert!(r.lattices.stable);
    assert_eq!(r.lattices.l.rank(), 14);
    assert_eq!(r.lattices.l_prime.rank(), 14);
    assert_eq!(r.order, CyclicOrder::Finite(10));
}

#[test]
fn degree1_order_matches_denominator_oracle() {
    let r = cyclic_order_degree1(6, 200).unwrap();
    let oracle = order_by_denominators(&psi0_delta1(), &r.lattices.l_prime).unwrap();
    assert_eq!(oracle, BigInt::from(10));
}

#[test]
fn degree1_quotient_independent_of_scaling() {
    let a = orbit_lattice_degree1(6, &BigInt::from(1)).unwrap();
    let b = orbit_lattice_degree1(6, &BigInt::from(6)).unwrap();
    assert_eq!(
        a.elementary_divisors().unwrap(),
        b.elementary_divisors().unwrap()
    );
    let v = psi0_delta1();
    assert_eq!(
        cyclic_order_in(&v, &a.l_prime, 200),
        cyclic_order_in(&v, &b.l_prime, 200)
    );
}

#[test]
fn degree1_order_against_degenerate_lattices() {
    let r = orbit_lattice_degree1(6, &BigInt::from(1)).unwrap();
    let v = psi0_delta1();
    assert_eq!(cyclic_order_in(&v, &r.l, 200), CyclicOrder::Finite(1));
    assert_eq!(
        cyclic_order_in(&v, &RationalLattice::zero(25), 200),
        CyclicOrder::Infinite
    );
}

#[test]
fn degree2_order_is_ten_and_refines_degree1() {
    let r2 = cyclic_order_degree2(1, 200).unwrap();
    eprintln!(
        "G ranks {}/{}, K ranks {}/{}",
        r2.image.degree1_rank(),
        r2.image.central_rank(),
        r2.commutators.degree1_rank(),
        r2.commutators.central_rank()
    );
    assert_eq!(r2.order, CyclicOrder::Finite(10));
    let r1 = cyclic_order_degree1(6, 200).unwrap();
    assert_eq!(r2.order.finite().unwrap() % r1.order.finite().unwrap(), 0);
    let psi = jones_core::quotients::phi2(&GroupWord::psi0()).unwrap();
    assert_eq!(order_in(&psi, &r2.image, 200), CyclicOrder::Finite(1));
}

#[test]
fn degree1_elementary_divisors() {
    let r = orbit_lattice_degree1(6, &BigInt::from(1)).unwrap();
    let divisors = r.elementary_divisors().unwrap();
    assert!(divisors.iter().all(|d| *d != BigInt::from(0)));
    let product: BigInt = divisors.iter().product();
    assert_eq!(product % BigInt::from(10), BigInt::from(0));
}

#[test]
fn degree2_lattices_nest() {
    let r = cyclic_order_degree2(1, 200).unwrap();
    let divisors = jones_core::quotients::rational_quotient_divisors(
        &r.image.degree1_lattice(),
        &r.commutators.degree1_lattice(),
    )
    .unwrap();
    assert!(divisors.iter().all(|d| *d != BigInt::from(0)));
}

#[test]
fn degree2_image_replicates_degree1_lattice() {
    let l = orbit_lattice_degree1(6, &BigInt::from(1)).unwrap().l;
    let a = cyclic_order_degree2(1, 200)
        .unwrap()
        .image
        .degree1_lattice();
    assert_eq!(a.rank(), 14);
    let one = BigInt::from(1);
    let both_ways = [
        jones_core::quotients::rational_quotient_divisors(&l, &a).unwrap(),
        jones_core::quotients::rational_quotient_divisors(&a, &l).unwrap(),
    ];
    for divisors in both_ways {
        assert!(divisors.iter().all(|d| *d == one), "{divisors:?}");
    }
}
