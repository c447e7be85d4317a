use crown_core::algebra::*;
use crown_core::graphs::*;
use crown_core::monoid::Sign;
use crown_core::{Caps, F2};

#[test]
fn crown_reconstruction_f2() {
    let caps = Caps::default();
    let crowns = Crowns::new(2).unwrap();
    let mut rebuilt = Vec::new();
    for s in Sign::BOTH {
        let c = crowns.crown(s);
        let a = q_ungraded::<F2>(c);
        let ag = annihilator_grading(&a).unwrap();
        let r = minimal_points(&ag.graded, caps.max_proj_points).unwrap();
        assert_eq!(r.len(), 10);
        let g = reconstruct_graph(&a, caps.max_proj_points).unwrap();
        assert!(graphs_isomorphic(&g, c, caps.max_graph_size).unwrap());
        rebuilt.push(g);
    }
    assert!(!graphs_isomorphic(&rebuilt[0], &rebuilt[1], caps.max_graph_size).unwrap());
}

#[test]
fn covers_are_injective() {
    for n in 2..=3 {
        let crowns = Crowns::new(n).unwrap();
        assert!(cover_injectivity::<F2>(crowns.pieces()).unwrap());
        for s in Sign::BOTH {
            assert!(cover_injectivity::<F2>(std::slice::from_ref(crowns.projection(s))).unwrap());
        }
    }
}
