//! Classification-table data: the equal-index open-orbit conditions, the
//! sufficient support patterns for primitive triples, diagram
//! automorphisms, separation-index bounds, and the traceability matrix
//! binding every encoded fact to its implementing operation and test.
//!
//! The two rule tables live as JSON data files with stable rule ids; the
//! predicates here interpret them.

use crate::rootsys::{Family, RootSystem, SimpleType};
use serde::Deserialize;
use serde_json::Value;
use std::collections::BTreeSet;
use std::sync::OnceLock;

pub const TABLE2_JSON: &str = include_str!("../data/table2.json");
pub const TABLE3_JSON: &str = include_str!("../data/table3.json");

fn node_spec(rank: usize, s: &str) -> usize {
    match s {
        "l" => rank,
        "l-1" => rank - 1,
        other => other.parse().expect("node spec"),
    }
}

#[derive(Deserialize)]
struct Table2File {
    rows: Vec<Table2Row>,
}

#[derive(Deserialize)]
struct Table2Row {
    id: String,
    family: String,
    rank: Option<usize>,
    kind: String,
    d_eq: Option<usize>,
    d_max: Option<usize>,
    nodes: Option<Vec<String>>,
}

fn table2() -> &'static Table2File {
    static T: OnceLock<Table2File> = OnceLock::new();
    T.get_or_init(|| serde_json::from_str(TABLE2_JSON).expect("table2 data parses"))
}

/// Is the equal-index tuple (m_1 ϖ_i, .., m_d ϖ_i), d >= 3, primitive
/// (equivalently: does the product of flag varieties carry an open orbit)?
/// Returns the verdict and the deciding rule id.
pub fn table2_equal_index(t: SimpleType, d: usize, node: usize) -> (bool, String) {
    assert!(d >= 3);
    assert!((1..=t.rank).contains(&node));
    let fam = t.family.to_string();
    for row in &table2().rows {
        if row.family != fam {
            continue;
        }
        if let Some(r) = row.rank {
            if r != t.rank {
                continue;
            }
        }
        let ok = match row.kind.as_str() {
            "ratio" => {
                // d < (l+1)^2 / (i (l+1-i))
                let n = (t.rank + 1) as i128;
                let i = node as i128;
                (d as i128) * i * (n - i) < n * n
            }
            "fixed" => {
                let d_ok = match (row.d_eq, row.d_max) {
                    (Some(e), _) => d == e,
                    (None, Some(m)) => d <= m,
                    _ => false,
                };
                let nodes: BTreeSet<usize> = row
                    .nodes
                    .as_ref()
                    .expect("fixed rows carry nodes")
                    .iter()
                    .map(|s| node_spec(t.rank, s))
                    .collect();
                d_ok && nodes.contains(&node)
            }
            other => panic!("unknown table2 kind {}", other),
        };
        return (ok, row.id.clone());
    }
    // no row for this family: no equal-index tuple of length >= 3 qualifies
    (false, format!("{}-none", fam))
}

#[derive(Debug, Clone)]
enum Pattern {
    Any,
    Eq(Vec<String>),
    NotEq(Vec<String>),
    Card { card: Option<usize>, card_ge: Option<usize>, not_eq: Option<Vec<String>> },
    Full,
    AdjacentPairBelowL,
    PairWithOne,
    OneOf(Vec<Vec<String>>),
}

struct Table3Row {
    id: u32,
    family: Family,
    rank: Option<usize>,
    alternatives: Vec<[Pattern; 3]>,
}

fn parse_pattern(v: &Value) -> Pattern {
    match v {
        Value::String(s) => match s.as_str() {
            "any" => Pattern::Any,
            "full" => Pattern::Full,
            "adjacent_pair_below_l" => Pattern::AdjacentPairBelowL,
            "pair_with_one" => Pattern::PairWithOne,
            other => panic!("unknown pattern {}", other),
        },
        Value::Object(map) => {
            if let Some(eq) = map.get("eq") {
                let nodes: Vec<String> = eq
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|x| x.as_str().unwrap().to_string())
                    .collect();
                return Pattern::Eq(nodes);
            }
            if let Some(v) = map.get("one_of") {
                let alts = v
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|set| {
                        set.as_array()
                            .unwrap()
                            .iter()
                            .map(|x| x.as_str().unwrap().to_string())
                            .collect()
                    })
                    .collect();
                return Pattern::OneOf(alts);
            }
            if map.contains_key("card") || map.contains_key("card_ge") {
                return Pattern::Card {
                    card: map.get("card").map(|x| x.as_u64().unwrap() as usize),
                    card_ge: map.get("card_ge").map(|x| x.as_u64().unwrap() as usize),
                    not_eq: map.get("not_eq").map(|v| {
                        v.as_array()
                            .unwrap()
                            .iter()
                            .map(|x| x.as_str().unwrap().to_string())
                            .collect()
                    }),
                };
            }
            if let Some(v) = map.get("not_eq") {
                let nodes = v
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|x| x.as_str().unwrap().to_string())
                    .collect();
                return Pattern::NotEq(nodes);
            }
            panic!("unparseable pattern {:?}", map)
        }
        _ => panic!("unparseable pattern {:?}", v),
    }
}

fn table3() -> &'static Vec<Table3Row> {
    static T: OnceLock<Vec<Table3Row>> = OnceLock::new();
    T.get_or_init(|| {
        let raw: Value = serde_json::from_str(TABLE3_JSON).expect("table3 data parses");
        raw["rows"]
            .as_array()
            .unwrap()
            .iter()
            .map(|row| {
                let family = match row["family"].as_str().unwrap() {
                    "A" => Family::A,
                    "B" => Family::B,
                    "C" => Family::C,
                    "D" => Family::D,
                    "E" => Family::E,
                    other => panic!("family {}", other),
                };
                let alternatives = row["patterns"]
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|alt| {
                        let ps: Vec<Pattern> =
                            alt.as_array().unwrap().iter().map(parse_pattern).collect();
                        [ps[0].clone(), ps[1].clone(), ps[2].clone()]
                    })
                    .collect();
                Table3Row {
                    id: row["id"].as_u64().unwrap() as u32,
                    family,
                    rank: row["rank"].as_u64().map(|r| r as usize),
                    alternatives,
                }
            })
            .collect()
    })
}

fn pattern_matches(p: &Pattern, rank: usize, s: &BTreeSet<usize>) -> bool {
    let set_of = |nodes: &[String]| -> BTreeSet<usize> {
        nodes.iter().map(|n| node_spec(rank, n)).collect()
    };
    match p {
        Pattern::Any => true,
        Pattern::Eq(nodes) => *s == set_of(nodes),
        Pattern::NotEq(nodes) => *s != set_of(nodes),
        Pattern::Full => s.len() == rank,
        Pattern::Card { card, card_ge, not_eq } => {
            card.map_or(true, |c| s.len() == c)
                && card_ge.map_or(true, |c| s.len() >= c)
                && not_eq.as_ref().map_or(true, |n| *s != set_of(n))
        }
        Pattern::AdjacentPairBelowL => {
            if s.len() != 2 {
                return false;
            }
            let v: Vec<usize> = s.iter().copied().collect();
            v[1] == v[0] + 1 && v[0] < rank
        }
        Pattern::PairWithOne => {
            s.len() == 2 && s.contains(&1)
        }
        Pattern::OneOf(alts) => alts.iter().any(|nodes| *s == set_of(nodes)),
    }
}

/// Diagram automorphisms as node permutations (0-based), identity included.
pub fn diagram_automorphisms(t: SimpleType) -> Vec<Vec<usize>> {
    let l = t.rank;
    let id: Vec<usize> = (0..l).collect();
    let mut out = vec![id.clone()];
    match (t.family, l) {
        (Family::A, _) if l >= 2 => {
            out.push((0..l).rev().collect());
        }
        (Family::D, 4) => {
            // all permutations of the three outer nodes 1, 3, 4
            for perm in [[0, 1, 3, 2], [2, 1, 0, 3], [3, 1, 2, 0], [2, 1, 3, 0], [3, 1, 0, 2]] {
                out.push(perm.to_vec());
            }
        }
        (Family::D, _) => {
            let mut p = id;
            p.swap(l - 2, l - 1);
            out.push(p);
        }
        (Family::E, 6) => {
            out.push(vec![5, 1, 4, 3, 2, 0]);
        }
        _ => {}
    }
    out
}

/// First matching Table 3 row for a support triple, tested over all tuple
/// permutations and diagram automorphisms. Returns the row id.
pub fn table3_match(rs: &RootSystem, supports: &[BTreeSet<usize>]) -> Option<u32> {
    if supports.len() != 3 {
        return None;
    }
    let t = rs.simple_type;
    let autos = diagram_automorphisms(t);
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    for row in table3() {
        if row.family != t.family {
            continue;
        }
        if let Some(r) = row.rank {
            if r != t.rank {
                continue;
            }
        }
        for auto in &autos {
            let mapped: Vec<BTreeSet<usize>> = supports
                .iter()
                .map(|s| s.iter().map(|&i| auto[i - 1] + 1).collect())
                .collect();
            for perm in &perms {
                for alt in &row.alternatives {
                    if (0..3).all(|k| pattern_matches(&alt[k], t.rank, &mapped[perm[k]])) {
                        return Some(row.id);
                    }
                }
            }
        }
    }
    None
}

/// Known exact separation indices (small rank) and published upper bounds.
/// Everything else falls back to |W|; always a valid upper bound.
pub fn sep_upper_bound(rs: &RootSystem) -> u128 {
    let l = rs.rank as u32;
    let exact: Option<u128> = match (rs.simple_type.family, rs.rank) {
        (Family::A, 1) => Some(2),
        (Family::A, 2) => Some(6),
        (Family::C, 2) => Some(4),
        (Family::G, 2) => Some(3),
        _ => None,
    };
    if let Some(v) = exact {
        return v;
    }
    let fact = |n: u128| (1..=n).product::<u128>();
    let published: Option<u128> = match rs.simple_type.family {
        Family::A => Some(2 * fact(l as u128) + 2),
        Family::B | Family::C => Some((1u128 << (l + 1)) - 2),
        Family::D => Some((1u128 << (l - 1)) * fact(l as u128) / (l as u128 - 1) + 2),
        Family::F => Some(30),
        Family::E => match rs.rank {
            6 => Some(242),
            7 => Some(4610),
            8 => Some(9222),
            _ => None,
        },
        _ => None,
    };
    let w = rs.weyl_order();
    published.map_or(w, |p| p.min(w))
}

/// Lower bounds for the maximal primitive tuple length, by type.
pub fn prim_lower_bound(t: SimpleType) -> u64 {
    match t.family {
        Family::A => t.rank as u64 + 2,
        Family::B | Family::C | Family::D => 3,
        Family::E if t.rank == 6 => 4,
        Family::E if t.rank == 7 => 3,
        _ => 2,
    }
}

/// One row of the traceability matrix: an encoded fact, the operation
/// implementing it, and the test exercising it.
pub struct TraceRow {
    pub item: &'static str,
    pub operation: &'static str,
    pub test: &'static str,
}

/// Every in-scope formula, table, and statement mapped to its
/// implementation and test. `tables trace` prints this; a test asserts the
/// required items are all present.
pub const TRACE: &[TraceRow] = &[
    TraceRow { item: "bound-table-b_G", operation: "rootsys::RootSystem::bound_b_g", test: "acceptance::criterion_1_bound_table" },
    TraceRow { item: "levi-argmax-table", operation: "rootsys::RootSystem::levi_bound_data", test: "acceptance::criterion_1_bound_table" },
    TraceRow { item: "equal-index-classification", operation: "tables::table2_equal_index", test: "acceptance::criterion_7_quiver_closed_form" },
    TraceRow { item: "primitive-triple-patterns", operation: "tables::table3_match", test: "primcheck_props::table3_rows_never_refuted" },
    TraceRow { item: "dual-pair-invariant-rule", operation: "chars::lr_coefficient", test: "chars::tests::dual_pair_invariants" },
    TraceRow { item: "e6-symmetric-power-product", operation: "chars::e6_fastpath", test: "acceptance::criterion_3_e6_formula" },
    TraceRow { item: "e6-fourfold-invariant-system", operation: "chars::invariant_dim_e6_system", test: "acceptance::criterion_4_lr_fixture" },
    TraceRow { item: "star-quiver-euler-form", operation: "quiver::euler_form", test: "quiver::tests::euler_form_examples" },
    TraceRow { item: "canonical-decomposition", operation: "quiver::canonical_decomposition", test: "acceptance::criterion_8_quiver_oracle_agreement" },
    TraceRow { item: "open-orbit-implies-primitive", operation: "flagorbit::primitivity_bridge", test: "flagorbit::tests::bridge_directions" },
    TraceRow { item: "primitive-ample-implies-open-orbit", operation: "flagorbit::primitivity_bridge", test: "flagorbit::tests::bridge_directions" },
    TraceRow { item: "open-orbit-length-bound", operation: "rootsys::RootSystem::bound_b_g", test: "acceptance::criterion_1_bound_table" },
    TraceRow { item: "equal-fundamental-open-orbits", operation: "flagorbit::open_orbit_flags", test: "acceptance::criterion_10_flag_oracle" },
    TraceRow { item: "fundamental-multiples-are-ample", operation: "primcheck::check_primitive", test: "primcheck_props::saturation_coherence" },
    TraceRow { item: "saturation-of-primitivity", operation: "primcheck::check_primitive", test: "primcheck_props::saturation_coherence" },
    TraceRow { item: "separation-implies-stable", operation: "primcheck::check_stable", test: "primcheck_props::stability_routes" },
    TraceRow { item: "primitive-length-sep-bound", operation: "primcheck::check_primitive", test: "primcheck_props::length_guard" },
    TraceRow { item: "weyl-order-length-bound", operation: "primcheck::prim_bounds", test: "primcheck::tests::prim_bounds_fixtures" },
    TraceRow { item: "prim-of-equal-index-tuples", operation: "primcheck::check_primitive", test: "acceptance::criterion_9_sl2_primitivity" },
    TraceRow { item: "primitive-triples-table", operation: "primcheck::check_primitive", test: "primcheck_props::table3_rows_never_refuted" },
    TraceRow { item: "invariant-free-saturation-geometry", operation: "primcheck::check_invariant_free", test: "acceptance::criterion_11_invariant_freeness" },
    TraceRow { item: "invariant-free-cone-and-rank-bounds", operation: "primcheck::check_invariant_free", test: "acceptance::criterion_11_invariant_freeness" },
    TraceRow { item: "gamma-monoid-membership", operation: "chars::gamma_member", test: "chars::tests::det_invariant_for_sl3" },
    TraceRow { item: "gamma-monoid-finite-generation", operation: "(documentation only)", test: "(documentation only)" },
    TraceRow { item: "stability-cone-conditions", operation: "primcheck::check_stable", test: "primcheck_props::stability_routes" },
    TraceRow { item: "quiver-primitivity-equivalence", operation: "quiver::is_primitive_sln_fund", test: "acceptance::criterion_8_quiver_oracle_agreement" },
    TraceRow { item: "lr-semigroup-property", operation: "chars::lr_coefficient", test: "acceptance::criterion_12_property_suites" },
    TraceRow { item: "separating-chamber-existence", operation: "sep::verify_separating", test: "sep::tests::single_chamber_never_separates" },
    TraceRow { item: "separation-index-bounds", operation: "sep::sep_index", test: "acceptance::criterion_6_separation_indices" },
    TraceRow { item: "closed-orbit-convexity-criterion", operation: "cones::zero_in_interior_conv", test: "primcheck_props::stable_witness_points" },
    TraceRow { item: "origin-trapping-chambers", operation: "cones::suter_chambers", test: "acceptance::criterion_12_property_suites" },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table2_fixtures() {
        let a5 = SimpleType::parse("A5").unwrap();
        assert!(table2_equal_index(a5, 3, 3).0); // 3 < 36/9 = 4
        assert!(!table2_equal_index(a5, 4, 3).0); // 4 < 4 fails
        assert!(table2_equal_index(a5, 6, 1).0); // 6 < 36/5
        assert!(!table2_equal_index(a5, 8, 1).0);
        let c3 = SimpleType::parse("C3").unwrap();
        assert!(table2_equal_index(c3, 3, 1).0);
        assert!(table2_equal_index(c3, 3, 3).0);
        assert!(!table2_equal_index(c3, 3, 2).0);
        assert!(!table2_equal_index(c3, 4, 1).0);
        let e6 = SimpleType::parse("E6").unwrap();
        assert!(table2_equal_index(e6, 4, 1).0);
        assert!(table2_equal_index(e6, 4, 6).0);
        assert!(!table2_equal_index(e6, 5, 1).0);
        assert!(!table2_equal_index(e6, 3, 2).0);
        let g2 = SimpleType::parse("G2").unwrap();
        assert!(!table2_equal_index(g2, 3, 1).0);
        let e8 = SimpleType::parse("E8").unwrap();
        assert!(!table2_equal_index(e8, 3, 8).0);
    }

    #[test]
    fn table3_matching() {
        let s = |v: &[usize]| -> BTreeSet<usize> { v.iter().copied().collect() };
        let a4 = RootSystem::new(SimpleType::parse("A4").unwrap());
        // row 1 up to permutation
        assert_eq!(table3_match(&a4, &[s(&[2, 3]), s(&[1]), s(&[1, 2, 4])]), Some(1));
        // row 1 via the diagram flip: support {l} maps to {1}
        assert_eq!(table3_match(&a4, &[s(&[4]), s(&[1, 2]), s(&[2, 3, 4])]), Some(1));
        let b3 = RootSystem::new(SimpleType::parse("B3").unwrap());
        assert_eq!(table3_match(&b3, &[s(&[1]), s(&[1, 2, 3]), s(&[2])]), Some(8));
        assert_eq!(table3_match(&b3, &[s(&[3]), s(&[3]), s(&[1, 2, 3])]), Some(9));
        assert_eq!(table3_match(&b3, &[s(&[2]), s(&[2]), s(&[2])]), None);
        let c3 = RootSystem::new(SimpleType::parse("C3").unwrap());
        assert_eq!(table3_match(&c3, &[s(&[3]), s(&[1, 2]), s(&[3])]), Some(10));
        assert_eq!(table3_match(&c3, &[s(&[3]), s(&[1]), s(&[2])]), Some(11));
        let d4 = RootSystem::new(SimpleType::parse("D4").unwrap());
        // triality: supports {3},{4} map onto {1},{3} patterns
        assert_eq!(
            table3_match(&d4, &[s(&[3]), s(&[1, 2, 3, 4]), s(&[2])]),
            Some(15)
        );
        let e7 = RootSystem::new(SimpleType::parse("E7").unwrap());
        assert_eq!(
            table3_match(&e7, &[s(&[7]), s(&[2]), s(&[1, 2, 3, 4, 5, 6, 7])]),
            Some(20)
        );
    }

    #[test]
    fn automorphisms_are_permutations() {
        for t in ["A5", "D4", "D5", "E6", "E7", "G2"] {
            let st = SimpleType::parse(t).unwrap();
            for auto in diagram_automorphisms(st) {
                let mut sorted = auto.clone();
                sorted.sort_unstable();
                assert_eq!(sorted, (0..st.rank).collect::<Vec<_>>(), "{}", t);
            }
        }
        assert_eq!(diagram_automorphisms(SimpleType::parse("D4").unwrap()).len(), 6);
        assert_eq!(diagram_automorphisms(SimpleType::parse("E6").unwrap()).len(), 2);
    }

    #[test]
    fn sep_bounds_sane() {
        for t in ["A1", "A2", "C2", "G2", "B3", "D4", "E6", "F4"] {
            let rs = RootSystem::new(SimpleType::parse(t).unwrap());
            let u = sep_upper_bound(&rs);
            assert!(u >= rs.rank as u128 + 1, "{}", t);
            assert!(u <= rs.weyl_order(), "{}", t);
        }
        assert_eq!(
            sep_upper_bound(&RootSystem::new(SimpleType::parse("B3").unwrap())),
            14
        );
    }
}
