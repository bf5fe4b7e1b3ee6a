mod common;

use chowkit::calculus::compose_graded;
use chowkit::json::Interchange;
use chowkit::kshadow::{identity_kernel, k_compose, mu, KKernel};
use chowkit::motive::{compatibility_check, nc_compose};
use common::*;
use proptest::prelude::*;

fn kernel_triple() -> impl Strategy<Value = (KKernel, KKernel, KKernel)> {
    (small_space(), small_space(), small_space(), small_space()).prop_flat_map(|(x, y, z, w)| {
        (kernel(x, y.clone()), kernel(y, z.clone()), kernel(z, w))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn mu_respects_composition((e, f, _) in kernel_triple()) {
        prop_assert_eq!(mu(&k_compose(&e, &f).unwrap()), compose_graded(&mu(&e), &mu(&f)).unwrap());
    }

    #[test]
    fn kernel_composition_is_associative((e, f, g) in kernel_triple()) {
        let left = k_compose(&k_compose(&e, &f).unwrap(), &g).unwrap();
        let right = k_compose(&e, &k_compose(&f, &g).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn identity_kernel_is_a_unit((e, _, _) in kernel_triple()) {
        prop_assert_eq!(k_compose(&identity_kernel(e.source()), &e).unwrap(), e.clone());
        prop_assert_eq!(k_compose(&e, &identity_kernel(e.target())).unwrap(), e);
    }

    #[test]
    fn routes_agree((e, f, _) in kernel_triple()) {
        prop_assert!(compatibility_check(&e));
        prop_assert_eq!(nc_compose(&e, &f).unwrap(), k_compose(&e, &f).unwrap());
    }

    #[test]
    fn kernel_json_round_trips((e, _, _) in kernel_triple()) {
        let s = e.to_json_string();
        prop_assert_eq!(KKernel::from_json_str(&s).unwrap(), e);
    }
}
