//! Exact Laurent arithmetic: products, exact division, substitution, JSON.

use cube_recurrence::laurent::{LaurentPoly, VarKey};

fn main() {
    let x = LaurentPoly::var(VarKey::X(0, 0, 0));
    let y = LaurentPoly::var(VarKey::X(-1, 0, 0));
    let a = LaurentPoly::var(VarKey::A(0, 0));

    let p = &(&x + &y) * &(&a - &LaurentPoly::one());
    println!("p         = {p}");
    println!("p / (x+y) = {}", p.div_exact(&(&x + &y)).unwrap());
    println!("p / x^2   = {}", p.div_exact(&(&x * &x)).unwrap());
    println!("p / (x+a) = {:?}", p.div_exact(&(&x + &a)));

    // x^3 / y, then x -> a + 1
    let q = &x.pow(2) * &x.div_exact(&y).unwrap();
    println!("q         = {q}");
    println!(
        "q[x->a+1] = {}",
        q.substitute(VarKey::X(0, 0, 0), &(&a + &LaurentPoly::one()), None)
            .unwrap()
    );

    let json = p.to_json();
    println!("json      = {json}");
    assert_eq!(LaurentPoly::from_json(&json).unwrap(), p);
}
