//! Empirical cross-checks. Run with `--nocapture` to see the reports.

use filiform::{betti, enumerate, label};

#[test]
fn betti_numbers_are_palindromic() {
    let mut broken = Vec::new();
    for n in 5..=12 {
        for g in enumerate(n).unwrap() {
            let b = betti(&g).betti;
            let reversed: Vec<usize> = b.iter().rev().copied().collect();
            if b != reversed {
                broken.push(format!("{} {b:?}", g.row()));
            }
        }
    }
    println!("b_k = b_(n-k): {} violations", broken.len());
    assert!(broken.is_empty(), "duality fails (probable bug): {broken:?}");
}

#[test]
fn second_betti_number_report() {
    let mut agree = 0;
    let mut differ = Vec::new();
    for n in 5..=12 {
        for g in enumerate(n).unwrap() {
            let b2 = betti(&g).betti[2];
            if b2 == n.div_ceil(2) {
                agree += 1;
            } else {
                differ.push(format!("{} b2 = {b2}, floor((n+1)/2) = {}", label(&g), n.div_ceil(2)));
            }
        }
    }
    println!("b2 = floor((n+1)/2) holds for {agree} algebras, not for {}:", differ.len());
    for line in &differ {
        println!("  {line}");
    }
}
