//! A tour of exact cyclotomic arithmetic: the two irrational values that
//! appear in the character tables, canonical forms, conjugation and the
//! literal grammar.

use chartab::cyclotomic::{rat, sqrt_minus_two, CycNum};

fn main() {
    // sqrt(-2) = E(8) + E(8)^3 lives at conductor 8.
    let omega = sqrt_minus_two();
    println!("omega        = {omega}   (conductor {})", omega.conductor());
    println!("omega^2      = {}", omega.mul(&omega));
    println!("conj(omega)  = {}", omega.conj());

    // The quadratic Gauss sum for p = 11: (-1 + sqrt(-11))/2.
    let beta = CycNum::gauss_quadratic(11).expect("11 = 3 mod 4");
    println!("beta         = {beta}");
    println!("beta + conj  = {}", beta.add(&beta.conj()));
    println!("beta * conj  = {}", beta.mul(&beta.conj()));
    // Minimal polynomial x^2 + x + 3.
    let check = beta.mul(&beta).add(&beta).add(&CycNum::from_integer(3));
    println!("beta^2 + beta + 3 = {check}");

    // Conductor minimization: values representable in a smaller field are
    // stored there.
    let i = CycNum::make(8, &[(2, rat(1))]).unwrap();
    println!("E(8)^2       = {i}   (conductor {})", i.conductor());
    let one = CycNum::make(12, &[(0, rat(1))]).unwrap();
    println!("1 at E(12)   = {one}   (conductor {})", one.conductor());

    // Literals round-trip through the canonical grammar.
    let parsed: CycNum = "1/2*E(8)+3-E(8)^3".parse().unwrap();
    println!("parsed       = {parsed}");
    let numeric = beta.numeric();
    println!("beta numerically = {:.5} + {:.5}i", numeric.0, numeric.1);
}
