//! Regenerates the four reference error tables and the relative deviation
//! of every cell from its published value.

use haar_burgers::cli::table_rows;

fn main() -> haar_burgers::Result<()> {
    for n in 1..=4 {
        println!("table {n}");
        for r in table_rows(n)? {
            println!(
                "  T={:<5} 2M={:<3} {:<5} computed {:.5e}  published {:.5e}  rel {:+.2e}",
                r.t, 2 << r.level, r.norm, r.computed, r.published, r.rel_dev()
            );
        }
    }
    Ok(())
}
