//! Run the whole pipeline on the catalog words and print a summary table.

use hyperlef::branch::compile_branched_cover;
use hyperlef::certify::certify_global_monodromy;
use hyperlef::fibration::FibrationSpec;
use hyperlef::words::{chain_power, involution_power, matsumoto_extended_word, matsumoto_word};

fn row(name: &str, spec: &FibrationSpec) {
    let cert = certify_global_monodromy(spec);
    match compile_branched_cover(spec) {
        Ok(d) => println!(
            "{name:<22} h={} mu={:<3} sigma={} verdict={:<20} ambient={:<14} chi_B={:<4} chi_M={}",
            spec.genus,
            spec.mu(),
            spec.count_separating(),
            format!("{}", cert.verdict),
            d.ambient.to_string(),
            d.chi_branch,
            d.cover.chi_m,
        ),
        Err(e) => println!("{name:<22} verdict={} ({e})", cert.verdict),
    }
}

fn main() {
    row("involution^2 (h=1)", &involution_power(1, 2));
    row("involution^2 (h=2)", &involution_power(2, 2));
    row("chain power (h=2)", &chain_power(2, 1));
    row("matsumoto", &matsumoto_word());
    row("matsumoto extended", &matsumoto_extended_word());
}
