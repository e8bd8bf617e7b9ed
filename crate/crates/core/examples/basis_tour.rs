//! Haar wavelets, their integrals, and expansion of sampled data.

use haar_burgers::{haar_eval, index_from_ordinal, p_eval, HaarBasis, SeriesKind};

fn main() -> haar_burgers::Result<()> {
    // Ordinal 1 is the scaling function h_1 = 1 on [0, 1).
    println!("ordinal  j  k  breakpoints");
    for i in 2..=8 {
        let w = index_from_ordinal(i)?;
        println!("{i:>7} {:>2} {:>2}  {:?}", w.level, w.translation, w.breakpoints);
    }

    let x = 0.3;
    println!("\nat x = {x}: h_3 = {}, p1_3 = {}, p2_3 = {}", haar_eval(3, x)?, p_eval(1, 3, x)?, p_eval(2, 3, x)?);

    let basis = HaarBasis::new(3)?;
    let samples: Vec<f64> = basis.points().iter().map(|x| (std::f64::consts::PI * x).sin()).collect();
    let coeffs = basis.expand(&samples)?;
    println!("\n2M = {}, orthogonality deviation {:.1e}", basis.size(), basis.orthogonality_deviation());
    println!("first four coefficients: {:?}", &coeffs[..4]);
    for &x in &[0.1, 0.5, 0.9] {
        println!(
            "x = {x}: series {:.6}, first integral {:.6}",
            basis.reconstruct(&coeffs, SeriesKind::Value, x)?,
            basis.reconstruct(&coeffs, SeriesKind::FirstIntegral, x)?
        );
    }
    Ok(())
}
