//! Reading and writing ballot files in both supported formats.
//!
//! The matrix format is a CSV with one row per candidate and one column per
//! voter (entry = that voter's rank for the candidate, optional label
//! column). The order format lists one strict preference per line with an
//! optional multiplicity. Parsing detects the format, keeps candidate
//! labels, and rejects malformed ballots with a line-accurate error.
//!
//! Run with `cargo run -p deepvote --example ballot_files`.

use deepvote::io::{detect_and_parse, parse_orders, to_matrix_csv, to_orders, SourceFormat};
use deepvote::rules;

const MATRIX: &str = "\
candidate,v1,v2,v3,v4,v5
north,1,1,4,4,3
east,2,2,2,2,2
south,3,3,3,3,1
west,4,4,1,1,4
";

const ORDERS: &str = "\
# weekend trip vote
2: north > east > south > west
2: west > east > south > north
1: south > east > north > west
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let from_matrix = detect_and_parse(MATRIX)?;
    assert!(matches!(from_matrix.source, SourceFormat::MatrixCsv));
    println!(
        "matrix input: {} candidates {:?}, {} voters",
        from_matrix.profile.m(),
        from_matrix.labels,
        from_matrix.profile.n()
    );

    let from_orders = detect_and_parse(ORDERS)?;
    assert!(matches!(from_orders.source, SourceFormat::Orders));
    println!(
        "order input:  {} candidates {:?}, {} voters",
        from_orders.profile.m(),
        from_orders.labels,
        from_orders.profile.n()
    );

    // Same election written two ways.
    assert_eq!(from_matrix.profile, from_orders.profile);
    assert_eq!(from_matrix.labels, from_orders.labels);

    // Round trips preserve the profile exactly.
    let csv = to_matrix_csv(&from_orders.labels, &from_orders.profile);
    assert_eq!(detect_and_parse(&csv)?.profile, from_orders.profile);
    let orders = to_orders(&from_matrix.labels, &from_matrix.profile);
    assert_eq!(parse_orders(&orders)?.profile, from_matrix.profile);
    println!("\nround trip through both writers preserves the profile");
    println!("\nas orders:\n{orders}");
    println!("as matrix:\n{csv}");

    let outcome = rules::bucklin(&from_matrix.profile);
    println!(
        "bucklin winners: {:?}",
        from_matrix.label_set(&outcome.winners)
    );

    // Errors carry the offending line.
    let bad = "1: north > east > north\n";
    match parse_orders(bad) {
        Err(e) => println!("\nrejected `{}`: {e}", bad.trim_end()),
        Ok(_) => unreachable!("duplicate candidate in one ballot"),
    }

    Ok(())
}
