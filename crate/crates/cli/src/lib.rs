//! Library half of the `ushift` command-line tool: response shapes,
//! the demo report engine, and the subcommand registry used by the
//! coverage test.

pub mod demos;
pub mod output;

/// Every subcommand the dispatcher accepts, in the order of the command
/// tree. The coverage test checks that each library operation is mapped
/// to exactly one of these.
pub const SUBCOMMANDS: [&str; 25] = [
    "mahler coeffs",
    "mahler eval",
    "mahler sum",
    "mahler diff",
    "mahler conv",
    "mahler coherent",
    "seq shift-s",
    "seq shift-t",
    "seq pair",
    "seq cyclic",
    "seq densify",
    "tate norm",
    "tate mul",
    "tate eval",
    "tate reduce",
    "tate member",
    "tate divides",
    "tate commutant",
    "model t3",
    "model embed",
    "model universal",
    "demo thm1",
    "demo thm2",
    "demo thm3",
    "demo duality",
];
