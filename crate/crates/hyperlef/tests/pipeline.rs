//! Cross-module integration: the full parse → validate → certify → compile
//! pipeline on the shipped sample files, and the deformation/resolution
//! rewrites applied to a compiled example.

use hyperlef::branch::{compile_branched_cover, Ambient, Parity};
use hyperlef::certify::{certify_global_monodromy, Verdict};
use hyperlef::fibration::{parse_fibration, print_fibration, validate, BaseSurface};
use hyperlef::invariants::{check_cover_identity, deform_cycle, resolve_block};
use hyperlef::words::matsumoto_word;
use std::path::Path;

fn sample(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name);
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn sample_files_parse_and_certify() {
    for (name, expect) in [
        ("matsumoto.lf", Verdict::IdentityUpstairs),
        ("matsumoto_ext.lf", Verdict::IdentityUpstairs),
        ("involution_sq.lf", Verdict::IdentityUpstairs),
        ("chain_power.lf", Verdict::IdentityUpstairs),
        ("uncertified.lf", Verdict::NotTrivial),
    ] {
        let spec = parse_fibration(&sample(name)).unwrap();
        assert!(validate(&spec).is_sound(), "{name}");
        assert_eq!(certify_global_monodromy(&spec).verdict, expect, "{name}");
    }
}

#[test]
fn shipped_matsumoto_file_matches_the_catalog_word() {
    let from_file = parse_fibration(&sample("matsumoto.lf")).unwrap();
    assert_eq!(from_file, matsumoto_word());
}

#[test]
fn compiled_samples_satisfy_the_cover_identity() {
    for name in ["matsumoto.lf", "matsumoto_ext.lf", "involution_sq.lf", "chain_power.lf"] {
        let spec = parse_fibration(&sample(name)).unwrap();
        let d = compile_branched_cover(&spec).unwrap();
        assert!(check_cover_identity(&d), "{name}");
        assert_eq!(d.disks, 2 * spec.genus + 2, "{name}");
    }
}

#[test]
fn deforming_both_separating_cycles_gives_the_thirty_fiber_word() {
    // Trading each separating cycle for its twelve-letter chain block turns
    // the eight-fiber fibration into a thirty-fiber nonseparating one. The
    // global class is unchanged, but the branched cover changes shape: the
    // ambient becomes the twisted sphere bundle.
    let spec = matsumoto_word();
    let sep_positions: Vec<usize> = spec
        .word
        .iter()
        .enumerate()
        .filter(|(_, c)| c.is_separating())
        .map(|(k, _)| k)
        .collect();
    assert_eq!(sep_positions, vec![1, 5]);

    // deform back-to-front so earlier indices stay valid
    let once = deform_cycle(&spec, 5).unwrap();
    let twice = deform_cycle(&once, 1).unwrap();
    assert_eq!(twice.mu(), 30);
    assert_eq!(twice.count_separating(), 0);
    assert_eq!(certify_global_monodromy(&twice).verdict, Verdict::IdentityUpstairs);

    let d = compile_branched_cover(&twice).unwrap();
    assert_eq!(d.ambient, Ambient::TwistedS2Bundle);
    assert_eq!(d.parity, Some(Parity::Twisted));
    assert_eq!(d.cover.chi_m, 2 * (2 - 4) + 30);

    // resolving the two blocks recovers the original word exactly; the
    // second block shifts to 5..17 once the first is contracted
    let back_once = resolve_block(&twice, 1..13).unwrap();
    assert_eq!(back_once.mu(), 19);
    let back = resolve_block(&back_once, 5..17).unwrap();
    assert_eq!(back, spec);
    assert_eq!(print_fibration(&back), print_fibration(&spec));
}

#[test]
fn rewritten_words_recertify_from_their_printed_form() {
    // print → parse → certify after a rewrite: the DSL round trip does not
    // lose certification.
    let spec = matsumoto_word();
    let deformed = deform_cycle(&spec, 1).unwrap();
    let reparsed = parse_fibration(&print_fibration(&deformed)).unwrap();
    assert_eq!(reparsed, deformed);
    assert_eq!(reparsed.base, BaseSurface::Sphere);
    assert_eq!(certify_global_monodromy(&reparsed).verdict, Verdict::IdentityUpstairs);
}

#[test]
fn values_are_shareable_across_threads() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<hyperlef::FibrationSpec>();
    assert_send_sync::<hyperlef::BraidWord>();
    assert_send_sync::<hyperlef::NormalForm>();
    assert_send_sync::<hyperlef::FreeGroupState>();
    assert_send_sync::<hyperlef::symplectic::SymplecticMatrix>();
    assert_send_sync::<hyperlef::IdentityCertificate>();
    assert_send_sync::<hyperlef::BranchedCoverDescription>();
    assert_send_sync::<hyperlef::kirby::FramedHandleComplex>();

    // batch compilation fans out per spec value
    let specs = vec![
        hyperlef::words::matsumoto_word(),
        hyperlef::words::involution_power(2, 2),
    ];
    let handles: Vec<_> = specs
        .into_iter()
        .map(|s| std::thread::spawn(move || compile_branched_cover(&s).unwrap().cover.chi_m))
        .collect();
    let results: Vec<i64> = handles.into_iter().map(|h| h.join().unwrap()).collect();
    assert_eq!(results, vec![4, 16]);
}

#[test]
fn parser_never_panics_on_noise() {
    // the grammar is total: arbitrary bytes produce errors, not panics
    let mut seed: u64 = 0x00c0ffee;
    let mut next = move || {
        seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        seed >> 33
    };
    let alphabet: Vec<char> = "genus base disk sphere word conj a s t '[](),;=0123456789#\n xq".chars().collect();
    for _ in 0..500 {
        let len = (next() % 60) as usize;
        let text: String = (0..len).map(|_| alphabet[(next() as usize) % alphabet.len()]).collect();
        let _ = parse_fibration(&text);
    }
}
