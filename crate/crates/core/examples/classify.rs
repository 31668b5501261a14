//! Tabulates the elastica type and predicted track widths across momenta.

use bicycle_geodesics::analysis::{classify, predicted_back_width, predicted_front_width};

fn main() {
    println!("{:>5} {:>10} {:>9} {:>9} {:>8} {:>8}", "a", "kind", "A", "B", "front", "back");
    for a in [0.0, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 4.0] {
        let c = classify(a, 1.0 + a);
        println!(
            "{a:>5} {:>10} {:>9.4} {:>9.4} {:>8.4} {:>8.4}",
            c.kind.to_string(),
            c.params.coef_a,
            c.params.coef_b,
            predicted_front_width(a),
            predicted_back_width(a)
        );
    }
    println!("a = 1 with zero curvature: {}", classify(1.0, 0.0).kind);
}
