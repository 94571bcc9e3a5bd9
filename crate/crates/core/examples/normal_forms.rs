//! Rewriting words in the generators of H4 and H8 to their PBW-style normal forms.

use hopf_bicross::catalog::{Presentation, Strategy};

fn main() {
    for p in [Presentation::h4(), Presentation::h8()] {
        println!("{} basis: {}", p.name, p.basis_labels().join(", "));
        println!(
            "  confluence failures up to length 4: {}",
            p.confluence_failures(4).expect("terminates").len()
        );
    }
    let h8 = Presentation::h8();
    for word in ["zz", "zzzz", "zg", "zhz", "gzhz"] {
        let nf = h8.normalize_str(word).expect("terminates");
        println!("H8: {word} -> {}", h8.render(&nf));
    }
    let h4 = Presentation::h4();
    for word in ["XG", "XX", "GXG", "XGXG"] {
        let w = h4.word(word).expect("generators G, X");
        let left = h4.normalize_with(&w, Strategy::Leftmost, 100).expect("terminates");
        let right = h4.normalize_with(&w, Strategy::Rightmost, 100).expect("terminates");
        println!(
            "H4: {word} -> {} (strategies agree: {})",
            h4.render(&left),
            left == right
        );
    }
}
