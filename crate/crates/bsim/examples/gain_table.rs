//! The saturated-throughput gain table: every capability bundle
//! against the one-fair-share baseline `1/n`, rounded to one decimal
//! the way the gains are usually quoted.
//!
//! Run with: `cargo run --example gain_table`

use bsim::cli::{table_csv, table_text};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    print!("{}", table_text(5)?);
    println!();
    println!("The same table grows with the component; at n = 9:");
    println!();
    print!("{}", table_text(9)?);
    println!();
    println!("Machine-readable form (n = 5):");
    print!("{}", table_csv(5)?);
    Ok(())
}
