//! Coverage invariant: every library operation has exactly one designated
//! subcommand surface, and every subcommand in the dispatch tree carries
//! at least one operation.

use std::collections::{BTreeMap, BTreeSet};

use ushift_cli::SUBCOMMANDS;

/// (operation, designated subcommand). An operation appears exactly once;
/// a subcommand may host several operations.
const OPERATION_MAP: [(&str, &str); 36] = [
    // scalar substrate
    ("from_rational", "tate eval"),
    ("add_sub_neg", "seq pair"),
    ("mul_div", "seq cyclic"),
    ("valuation_abs_exponent", "tate norm"),
    ("factorial_valuation", "demo thm3"),
    // sequence spaces
    ("shift_s", "seq shift-s"),
    ("shift_t", "seq shift-t"),
    ("sup_norm", "seq shift-s"),
    ("pairing", "seq pair"),
    ("annihilator_geometric", "demo duality"),
    ("cyclic_vector", "seq cyclic"),
    ("cyclic_error", "seq cyclic"),
    ("densify_cyclic", "seq densify"),
    ("basis_approximation_error", "demo thm2"),
    // Mahler calculus
    ("mahler_p", "mahler eval"),
    ("mahler_coeffs", "mahler coeffs"),
    ("mahler_eval", "mahler eval"),
    ("indefinite_sum", "mahler sum"),
    ("difference", "mahler diff"),
    ("shifted_convolution", "mahler conv"),
    ("coherent_state", "mahler coherent"),
    // Tate algebra
    ("gauss_norm", "tate norm"),
    ("multiply", "tate mul"),
    ("evaluate", "tate eval"),
    ("s1_apply", "demo thm1"),
    ("t1_apply", "demo duality"),
    ("weierstrass_reduce", "tate reduce"),
    ("ideal_member", "tate member"),
    ("divides", "tate divides"),
    ("commutant_poly_approx", "tate commutant"),
    // factorial model and universality
    ("t3_apply", "model t3"),
    ("factorial_norm", "model t3"),
    ("radius_check", "demo thm3"),
    ("embed_w", "model embed"),
    ("te_apply", "model universal"),
    ("verify_universality", "model universal"),
];

#[test]
fn every_operation_has_exactly_one_subcommand() {
    let mut seen = BTreeMap::new();
    for (op, home) in OPERATION_MAP {
        assert!(
            seen.insert(op, home).is_none(),
            "operation {op} is mapped twice"
        );
        assert!(
            SUBCOMMANDS.contains(&home),
            "operation {op} maps to unknown subcommand {home}"
        );
    }
}

#[test]
fn every_subcommand_hosts_an_operation() {
    let hosts: BTreeSet<&str> = OPERATION_MAP.iter().map(|(_, home)| *home).collect();
    for sub in SUBCOMMANDS {
        assert!(hosts.contains(sub), "subcommand {sub} hosts no operation");
    }
}
