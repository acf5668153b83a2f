use super::*;
use crate::compositions::enumerate_set_compositions;

fn bowtie() -> HopfStructure {
    // b, d below both a and c
    HopfStructure::poset(&["a", "b", "c", "d"], &[["b", "a"], ["b", "c"], ["d", "a"], ["d", "c"]]).unwrap()
}

fn square() -> HopfStructure {
    HopfStructure::graph(&["a", "b", "c", "d"], &[["a", "b"], ["a", "c"], ["b", "d"], ["c", "d"]]).unwrap()
}

fn u24() -> HopfStructure {
    let g = ["0", "1", "2", "3"];
    let mut bases = vec![];
    for i in 0..4 {
        for j in i + 1..4 {
            bases.push(vec![g[i], g[j]]);
        }
    }
    HopfStructure::matroid(&g, &bases).unwrap()
}

fn perm(h: &HopfStructure, s: &str) -> Permutation {
    Permutation::parse_cycles(h.universe(), s).unwrap()
}

fn comp(h: &HopfStructure, s: &str) -> SetComposition {
    SetComposition::parse_in(h.universe(), s).unwrap()
}

#[test]
fn poset_minors() {
    let p = bowtie();
    let r = p.restrict(&["b", "d"]).unwrap();
    assert_eq!(r.ground_labels(), ["b", "d"]);
    assert!(r.char_value(CharacterSpec::Chromatic).unwrap(), "antichain");
    let c = p.contract(&["b", "d"]).unwrap();
    assert_eq!(c.ground_labels(), ["a", "c"]);
    assert!(c.char_value(CharacterSpec::Chromatic).unwrap());
    assert!(p.coproduct(&["a", "b"]).unwrap().is_none());
    assert!(p.coproduct(&["b", "d"]).unwrap().is_some());
    assert!(p.restrict(&["a", "x"]).is_err());
}

#[test]
fn matroid_minors() {
    let m = u24();
    let r = m.restrict(&["0", "1"]).unwrap();
    match r.body() {
        Body::Matroid { bases } => assert_eq!(&bases[..], &[0b0011]),
        _ => unreachable!(),
    }
    let c = m.contract(&["0", "1"]).unwrap();
    assert_eq!(c.ground_labels(), ["2", "3"]);
    match c.body() {
        Body::Matroid { bases } => assert_eq!(&bases[..], &[0]),
        _ => unreachable!(),
    }
    assert!(c.char_value(CharacterSpec::Chromatic).unwrap());
}

/// Oracle: independent sets from the basis list, then maximal ones.
#[test]
fn matroid_minors_match_independent_sets() {
    let m = u24();
    let Body::Matroid { bases } = m.body() else { unreachable!() };
    let indep: Vec<Mask> = (0..16u32).filter(|&s| bases.iter().any(|b| s & !b == 0)).collect();
    for s in 1..16u32 {
        let inside: Vec<Mask> = indep.iter().copied().filter(|i| i & !s == 0).collect();
        let r = inside.iter().map(|i| i.count_ones()).max().unwrap();
        let mut want: Vec<Mask> = inside.into_iter().filter(|i| i.count_ones() == r).collect();
        want.sort();
        let Body::Matroid { bases: got } = m.restrict_mask(s).body().clone() else { unreachable!() };
        assert_eq!(&got[..], &want[..]);
        // contraction: I ⊆ N∖S independent in M/S iff I ∪ B_S independent in M
        let bs = want[0];
        let rest = 15 & !s;
        let cin: Vec<Mask> = indep.iter().copied().filter(|i| i & !rest == 0 && indep.contains(&(i | bs))).collect();
        let rc = cin.iter().map(|i| i.count_ones()).max().unwrap();
        let mut cwant: Vec<Mask> = cin.into_iter().filter(|i| i.count_ones() == rc).collect();
        cwant.sort();
        let Body::Matroid { bases: cgot } = m.contract_mask(s).body().clone() else { unreachable!() };
        assert_eq!(&cgot[..], &cwant[..]);
    }
}

#[test]
fn matroid_validation() {
    assert!(HopfStructure::matroid(&["0", "1", "2"], &[vec!["0", "1"], vec!["2"]]).is_err());
    // {01, 23} fails exchange
    assert!(HopfStructure::matroid(&["0", "1", "2", "3"], &[vec!["0", "1"], vec!["2", "3"]]).is_err());
    assert!(HopfStructure::matroid::<&str>(&["0"], &[]).is_err());
}

#[test]
fn graph_minors_and_characters() {
    let g = square();
    let r = g.restrict(&["a", "d"]).unwrap();
    assert!(r.char_value(CharacterSpec::Chromatic).unwrap());
    let edgeless = HopfStructure::graph::<&str>(&["x", "y", "z"], &[]).unwrap();
    assert!(edgeless.char_value(CharacterSpec::Chromatic).unwrap());
    assert!(!u24().char_value(CharacterSpec::Chromatic).unwrap());
    assert!(g.char_value(CharacterSpec::WeakMixed).is_err());
}

fn figure_double_poset() -> HopfStructure {
    HopfStructure::double_poset(
        &["a", "b", "c", "d"],
        &[["a", "b"], ["a", "d"], ["c", "b"], ["c", "d"]],
        &[["b", "c"], ["d", "a"]],
    )
    .unwrap()
}

#[test]
fn double_poset_characters() {
    let h = figure_double_poset();
    let ac = h.restrict(&["a", "c"]).unwrap();
    assert!(ac.char_value(CharacterSpec::InversionFree).unwrap());
    // c <1 b and b <2 c
    let bc = h.restrict(&["b", "c"]).unwrap();
    assert!(!bc.char_value(CharacterSpec::InversionFree).unwrap());
    let ab = h.restrict(&["a", "b"]).unwrap();
    assert!(ab.char_value(CharacterSpec::InversionFree).unwrap());
}

#[test]
fn proper_composition_examples() {
    let p = bowtie();
    assert!(p.proper_composition(CharacterSpec::Zeta, &comp(&p, "b,d|a,c")).unwrap());
    assert!(!p.proper_composition(CharacterSpec::Zeta, &comp(&p, "a,c|b,d")).unwrap());

    let letters = ["a", "b", "c", "d"];
    let triples: Vec<Vec<&str>> = (0..4).map(|k| letters.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, l)| *l).collect()).collect();
    let hg = HopfStructure::hypergraph(&letters, &triples).unwrap();
    assert!(hg.proper_composition(CharacterSpec::UniqueLocalMax, &comp(&hg, "a,b|c|d")).unwrap());
    assert!(!hg.proper_composition(CharacterSpec::UniqueLocalMax, &comp(&hg, "c|d|a,b")).unwrap());

    let m = u24();
    for c in enumerate_set_compositions(m.universe()).unwrap() {
        if c.type_of().to_string() == "1,2,1" {
            assert!(!m.proper_composition(CharacterSpec::Chromatic, &c).unwrap(), "{c}");
        }
    }
    assert!(p.proper_composition(CharacterSpec::Chromatic, &SetComposition::parse("x|y").unwrap()).is_err());
}

#[test]
fn automorphism_examples() {
    let g = square();
    assert!(g.automorphism_check(&perm(&g, "(a b d c)")).unwrap());
    assert!(!g.automorphism_check(&perm(&g, "(a b)")).unwrap());
    let p = bowtie();
    assert!(p.automorphism_check(&perm(&p, "(a c)(b d)")).unwrap());
    assert!(!p.automorphism_check(&perm(&p, "(a b)")).unwrap());
    let a3 = HopfStructure::loday_associahedron(3).unwrap();
    assert!(a3.automorphism_check(&perm(&a3, "(1 3)")).unwrap());
    assert!(!a3.automorphism_check(&perm(&a3, "(1 2)")).unwrap());
}

#[test]
fn coloring_examples() {
    // the cycle a–b–c–d–a, whose bipartition is {a,c} | {b,d}
    let cyc = HopfStructure::graph(&["a", "b", "c", "d"], &[["a", "b"], ["b", "c"], ["c", "d"], ["d", "a"]]).unwrap();
    let f = [1, 2, 1, 2];
    assert!(cyc.proper_coloring(CharacterSpec::Chromatic, &f).unwrap());
    assert!(cyc.direct_coloring(CharacterSpec::Chromatic, &f).unwrap());
    assert!(bowtie().proper_coloring(CharacterSpec::Zeta, &[1, 1, 1, 1]).unwrap());
    assert!(!u24().proper_coloring(CharacterSpec::Chromatic, &[1, 1, 1, 1]).unwrap());
    assert!(!u24().direct_coloring(CharacterSpec::Chromatic, &[1, 1, 1, 1]).unwrap());
    assert!(cyc.proper_coloring(CharacterSpec::Chromatic, &[1, 2]).is_err());
}

#[test]
fn loday_a3_points() {
    let a3 = HopfStructure::loday_associahedron(3).unwrap();
    let Body::GenPermutohedron { points } = a3.body() else { unreachable!() };
    let want: Vec<Vec<i64>> =
        vec![vec![1, 2, 3], vec![1, 3, 2], vec![1, 4, 1], vec![2, 1, 3], vec![2, 2, 2], vec![2, 3, 1], vec![3, 1, 2], vec![3, 2, 1]];
    let got: Vec<Vec<i64>> = points.iter().map(|p| p.iter().map(|x| x.to_integer().try_into().unwrap()).collect()).collect();
    assert_eq!(got, want);
}

#[test]
fn simplicial_character_counts_vertices() {
    let s = HopfStructure::simplicial_complex(&["0", "1", "2", "3"], &[vec!["0", "1", "2", "3"]]).unwrap();
    assert!(!s.char_value(CharacterSpec::DimBound(2)).unwrap());
    assert!(s.restrict(&["0", "1"]).unwrap().char_value(CharacterSpec::DimBound(2)).unwrap());
    assert!(!s.restrict(&["0", "1", "2"]).unwrap().char_value(CharacterSpec::DimBound(2)).unwrap());
    assert!(s.char_value(CharacterSpec::DimBound(4)).unwrap());
}

#[test]
fn mixed_graph_rules() {
    let h = HopfStructure::mixed_graph(&["a", "b", "c", "d"], &[["b", "c"], ["d", "a"]], &[["b", "a"], ["d", "c"]]).unwrap();
    // a directed edge from the back part into the front part kills the split
    assert!(h.coproduct(&["a"]).unwrap().is_none());
    assert!(h.coproduct(&["b"]).unwrap().is_some());
    assert!(HopfStructure::mixed_graph(&["a", "b"], &[], &[["a", "b"], ["b", "a"]]).is_err());
}

#[test]
fn convexity_holds_on_examples() {
    let cases = [
        (bowtie(), CharacterSpec::Zeta),
        (bowtie(), CharacterSpec::Chromatic),
        (square(), CharacterSpec::Chromatic),
        (u24(), CharacterSpec::Chromatic),
        (figure_double_poset(), CharacterSpec::InversionFree),
    ];
    for (h, phi) in cases {
        assert_eq!(balanced_convexity(&h, phi).unwrap(), ConvexityCheck::Holds, "{:?} {phi}", h.kind());
    }
    let a3 = HopfStructure::loday_associahedron(3).unwrap();
    assert_eq!(balanced_convexity(&a3, CharacterSpec::VertexGeneric).unwrap(), ConvexityCheck::NotApplicable);
}

#[test]
fn convexity_violation_is_reported() {
    // s = 0 is rejected at load because single vertices become uncolorable;
    // bypassing that check must produce a condition-1 witness
    let s = HopfStructure::simplicial_complex(&["0", "1", "2"], &[vec!["0", "1", "2"]]).unwrap();
    assert!(balanced_convexity(&s, CharacterSpec::DimBound(0)).is_err());
    match convexity::scan(&s, CharacterSpec::DimBound(0)) {
        ConvexityCheck::Violated(v) => {
            assert_eq!(v.condition, 1);
            assert_eq!(v.restricted_to.len(), 1);
        }
        other => panic!("expected a violation, got {other:?}"),
    }
    assert_eq!(balanced_convexity(&s, CharacterSpec::DimBound(1)).unwrap(), ConvexityCheck::Holds);
}
