//! Frequency analysis of generator spectra: integer levels, difference sets,
//! and the evaluation counts they imply.
//!
//! Run with: `cargo run -p qfourier --example spectrum`

use num_complex::Complex64;
use qfourier::{difference_set, eigendecompose, rationalize, ComplexMatrix, Pauli};

fn report(name: &str, matrix: &ComplexMatrix) {
    let operator = eigendecompose(matrix).unwrap();
    print!("{name}\n  eigenvalues: [");
    for (i, ev) in operator.eigenvalues().iter().enumerate() {
        print!("{}{ev:.4}", if i > 0 { ", " } else { "" });
    }
    println!("]");
    match difference_set(&operator, 1e-9, 1_000_000) {
        Ok(fs) => {
            println!("  scale alpha        : {:.6}", fs.alpha());
            println!("  integer levels     : {:?}", fs.levels());
            println!("  difference set D   : {:?}", fs.differences());
            println!(
                "  evaluations needed : {} (dense bound {})",
                fs.size(),
                2 * fs.max_freq() + 1
            );
        }
        Err(e) => println!("  {e}"),
    }
    println!();
}

fn main() {
    let x = Pauli::X.matrix();
    let z = Pauli::Z.matrix();
    let id = ComplexMatrix::identity(2);
    let re = |v: f64| Complex64::new(v, 0.0);

    report(
        "Pauli X / 2 (the textbook rotation generator)",
        &x.scale(re(0.5)),
    );
    report("Pauli Z (integer eigenvalues, scale 2 after shifting)", &z);
    report(
        "(Z(x)1 + 1(x)Z)/2 (three evenly spaced levels)",
        &z.kron(&id).add(&id.kron(&z)).scale(re(0.5)),
    );

    // cross-resonance-style two-qubit generator X(x)1 - b Z(x)X + c 1(x)X;
    // at b = 3/4, c = 1/4 the spectrum is commensurate and sparse
    let cross = |b: f64, c: f64| {
        x.kron(&id)
            .add(&z.kron(&x).scale(re(-b)))
            .add(&id.kron(&x).scale(re(c)))
    };
    report(
        "cross-resonance generator at b = 3/4, c = 1/4 (sparse: 9 < 13)",
        &cross(0.75, 0.25),
    );
    report(
        "cross-resonance generator at b = 1, c = 1/3 (incommensurable)",
        &cross(1.0, 1.0 / 3.0),
    );

    // rationalization on raw numbers
    println!("rationalize [0, 0.5, 2.5, 3]:");
    let (alpha, levels) = rationalize(&[0.0, 0.5, 2.5, 3.0], 1e-9, 1_000_000).unwrap();
    println!("  alpha = {alpha}, levels = {levels:?}");
    println!("rationalize [0, 1, sqrt 2]:");
    match rationalize(&[0.0, 1.0, 2f64.sqrt()], 1e-9, 1_000_000) {
        Ok(_) => unreachable!(),
        Err(e) => println!("  {e}"),
    }
}
