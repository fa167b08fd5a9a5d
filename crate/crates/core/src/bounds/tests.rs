use super::*;

fn edges(n: usize, e: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, e).unwrap()
}

fn int_of(v: Value) -> i64 {
    match v {
        Value::Int(i) => i,
        Value::Surd(s) => panic!("expected an integer, got {s}"),
    }
}

#[test]
fn mantel_examples() {
    let c = check_mantel(&Graph::complete_bipartite(2, 3).unwrap()).unwrap();
    assert!(c.holds && c.tight);
    assert_eq!((int_of(c.lhs), int_of(c.rhs)), (6, 6));
    assert_eq!(c.consistent, Some(true));

    let c = check_mantel(&Graph::cycle(5).unwrap()).unwrap();
    assert!(c.holds && !c.tight);

    let c = check_mantel(&Graph::empty(1).unwrap()).unwrap();
    assert!(c.tight);
    assert_eq!(c.consistent, Some(true));

    assert!(matches!(
        check_mantel(&Graph::complete(3).unwrap()),
        Err(Error::HasTriangle)
    ));
}

#[test]
fn thm2_open_examples() {
    let c = check_thm2_open(&Graph::cycle(4).unwrap()).unwrap();
    assert!(c.tight);
    assert_eq!(c.consistent, Some(true));
    assert_eq!(
        c.rhs,
        Value::Surd(Surd {
            int: 5,
            coeff: -1,
            radicand: 9
        })
    );

    let c = check_thm2_open(&Graph::path(5).unwrap()).unwrap();
    assert_eq!(int_of(c.lhs), 3);
    assert!(c.holds && !c.tight);
    assert!((c.rhs.approx() - 3.354).abs() < 1e-3);

    let c = check_thm2_open(&Graph::complete_bipartite(3, 3).unwrap()).unwrap();
    assert_eq!(int_of(c.lhs), 2);
    assert!(c.holds && c.tight);
    assert_eq!(c.consistent, Some(true));

    let split = (
        c.context["edges_inside"],
        c.context["edges_cross"],
        c.context["edges_outside"],
    );
    assert_eq!(split.0 + split.1 + split.2, 9);

    assert!(matches!(
        check_thm2_open(&Graph::complete(3).unwrap()),
        Err(Error::HasTriangle)
    ));
    assert!(matches!(
        check_thm2_open(&Graph::empty(2).unwrap()),
        Err(Error::IsolatedVertex(0))
    ));
}

#[test]
fn thm2_pack_examples() {
    let c = check_thm2_pack(&Graph::path(4).unwrap()).unwrap();
    assert!(c.tight);
    assert_eq!(c.consistent, Some(true));

    let c = check_thm2_pack(&Graph::cycle(6).unwrap()).unwrap();
    assert_eq!(int_of(c.lhs), 2);
    assert!(c.holds && !c.tight);
    assert!((c.rhs.approx() - 2.708).abs() < 1e-3);

    let c = check_thm2_pack(&Graph::complete_bipartite(2, 2).unwrap()).unwrap();
    assert_eq!(int_of(c.lhs), 1);
    assert!(c.holds && !c.tight);
}

#[test]
fn gamma_diameter_examples() {
    let c = check_gamma_diameter(&Graph::path(7).unwrap()).unwrap();
    assert_eq!((int_of(c.lhs), int_of(c.rhs)), (3, 3));
    assert!(c.tight);
    let c = check_gamma_diameter(&Graph::complete(5).unwrap()).unwrap();
    assert!(c.tight);
    let c = check_gamma_diameter(&Graph::cycle(4).unwrap()).unwrap();
    assert_eq!(int_of(c.lhs), 2);
    assert!(c.holds && !c.tight);
    assert!(matches!(
        check_gamma_diameter(&Graph::empty(2).unwrap()),
        Err(Error::Disconnected)
    ));
}

#[test]
fn prop3_examples() {
    let c = check_prop3(&Graph::path(7).unwrap(), 1).unwrap();
    assert_eq!((int_of(c.lhs), int_of(c.rhs)), (3, 3));
    assert_eq!(c.witness, Some([0, 3, 6].into_iter().collect()));
    assert_eq!(c.consistent, Some(true));

    let c = check_prop3(&Graph::path(4).unwrap(), 2).unwrap();
    assert_eq!((int_of(c.lhs), int_of(c.rhs)), (3, 3));
    assert_eq!(c.witness, Some([0, 1, 3].into_iter().collect()));
    assert_eq!(c.consistent, Some(true));

    let c = check_prop3(&Graph::complete(6).unwrap(), 1).unwrap();
    assert_eq!((int_of(c.lhs), int_of(c.rhs)), (1, 1));

    assert!(check_prop3(&Graph::path(3).unwrap(), 3).is_err());
}

#[test]
fn obs_rho1_examples() {
    for g in [
        Graph::cycle(4).unwrap(),
        Graph::path(4).unwrap(),
        Graph::empty(1).unwrap(),
    ] {
        assert!(check_obs_rho1(&g).unwrap().holds);
    }
}

#[test]
fn thm4_examples() {
    let c = check_thm4(&Graph::path(4).unwrap()).unwrap();
    assert!(c.holds && c.tight);
    assert_eq!(c.context["both_diam_three"], 1);
    assert_eq!((c.context["sum"], c.context["product"]), (4, 4));

    assert!(matches!(
        check_thm4(&Graph::cycle(5).unwrap()),
        Err(Error::DiameterTooSmall(2))
    ));

    // ρ(P5) = 2, complement has ρ = 1: the sum 3 stays below the bound 4.
    let c = check_thm4(&Graph::path(5).unwrap()).unwrap();
    assert_eq!(c.context["max_diam"], 4);
    assert_eq!(c.context["delta_prime"], 2);
    assert_eq!((c.context["sum"], int_of(c.rhs)), (3, 4));
    assert!(c.holds && !c.tight);

    assert!(matches!(
        check_thm4(&Graph::star(3).unwrap()),
        Err(Error::ComplementDisconnected)
    ));
    assert!(matches!(
        check_thm4(&edges(4, &[(0, 1), (2, 3)])),
        Err(Error::Disconnected)
    ));
}

#[test]
fn lemma5_examples() {
    let c = check_lemma5(&Graph::star(3).unwrap()).unwrap();
    assert!(c.tight);
    assert_eq!(c.consistent, Some(true));
    let c = check_lemma5(&Graph::complete(4).unwrap()).unwrap();
    assert_eq!((int_of(c.lhs), int_of(c.rhs)), (1, 2));
    assert_eq!(c.consistent, Some(true));
    let c = check_lemma5(&Graph::cycle(6).unwrap()).unwrap();
    assert_eq!((int_of(c.lhs), int_of(c.rhs)), (2, 5));
}

#[test]
fn l2_ng_examples() {
    let c = check_l2_ng(&Graph::path(4).unwrap()).unwrap();
    assert_eq!((int_of(c.lhs), int_of(c.rhs)), (6, 6));
    assert!(c.tight);
    let c = check_l2_ng(&Graph::empty(1).unwrap()).unwrap();
    assert_eq!((int_of(c.lhs), int_of(c.rhs)), (2, 3));
    let c = check_l2_ng(&Graph::cycle(5).unwrap()).unwrap();
    assert!(c.holds);
    assert_eq!(c.context["connected"], 1);
}

#[test]
fn ids_parse() {
    for id in BoundId::ALL {
        assert_eq!(id.as_str().parse::<BoundId>().unwrap(), id);
        assert_eq!(serde_json::to_value(id).unwrap(), id.as_str());
    }
    assert!("nope".parse::<BoundId>().is_err());
}

#[test]
fn diametral_witness_patterns() {
    let path: Vec<usize> = (0..8).collect();
    assert_eq!(diametral_witness(&path, 1).to_vec(), vec![0, 3, 6]);
    assert_eq!(diametral_witness(&path, 2).to_vec(), vec![0, 1, 3, 4, 6, 7]);
}
