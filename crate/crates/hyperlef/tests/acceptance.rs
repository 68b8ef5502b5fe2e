//! Acceptance suite: one test per criterion, exact assertions throughout.
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion pass lines.

use hyperlef::braid::{BraidWord, Letter};
use hyperlef::branch::{compile_branched_cover, Ambient, Parity};
use hyperlef::certify::{certify_global_monodromy, downstairs_word, Verdict};
use hyperlef::cover::lift_framing;
use hyperlef::fibration::{BaseSurface, FibrationSpec, SymmetricCycle};
use hyperlef::garside::{half_twist_word, normal_form, prove_relation};
use hyperlef::hurwitz::{act_on_state, is_trivial_downstairs, FreeGroupState};
use hyperlef::invariants::{
    check_cover_identity, deform_cycle, milnor_data, resolution_data, resolve_block,
    signature_endo,
};
use hyperlef::kirby::{
    gamma0_base_model, gamma0_extended_model, gamma0_final_model, simplify_model, MoveKind,
};
use hyperlef::symplectic::{symplectic_of_braid, symplectic_of_cycle, SymplecticMatrix};
use hyperlef::words::{chain_power, involution_power, matsumoto_extended_word, matsumoto_word};
use std::collections::BTreeMap;

/// Deterministic split-mix generator for the randomized suites.
struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

fn random_braid(rng: &mut Rng, strands: usize, len: usize) -> BraidWord {
    let mut letters = Vec::with_capacity(len);
    for _ in 0..len {
        let index = 1 + rng.below(strands - 1);
        let inverse = rng.next() % 2 == 0;
        letters.push(Letter { index, inverse });
    }
    BraidWord::new(strands, letters)
}

#[test]
fn criterion_01_framing_lift() {
    for h in 1..=10i64 {
        assert_eq!(lift_framing(0, h + 1), -(h + 1));
    }
    for g in 1..=5i64 {
        assert_eq!(lift_framing(-1, g + 1), -(g + 2));
    }
    println!("acceptance 1: PASS framing lift anchors exact for h=1..10, g=1..5");
}

#[test]
fn criterion_02_chain_relation() {
    for g in 1..=3usize {
        let strands = 2 * g + 1;
        let once: Vec<i64> = (1..=2 * g as i64).collect();
        let chain = BraidWord::from_signed(strands, &once).repeat(2 * (2 * g + 1));
        let delta4 = half_twist_word(strands).repeat(4);
        assert!(prove_relation(&chain, &delta4), "chain relation fails at g={g}");

        // symplectic product of the upstairs block inside genus h = g+1
        let h = g + 1;
        let mut word = Vec::new();
        for _ in 0..2 * (2 * g + 1) {
            for i in 1..=2 * g {
                word.push(SymmetricCycle::arc(h, i));
            }
        }
        let m = hyperlef::symplectic::symplectic_of_word(h, &word);
        assert!(m.is_identity(), "chain block not symplectically trivial at g={g}");
    }
    println!("acceptance 2: PASS chain relation (σ₁…σ_2g)^(2(2g+1)) = Δ⁴ and symplectic identity for g=1,2,3");
}

#[test]
fn criterion_03_matsumoto_example() {
    let spec = matsumoto_word();
    assert_eq!(spec.mu(), 8);
    assert_eq!(spec.count_separating(), 2);

    let cert = certify_global_monodromy(&spec);
    assert_eq!(cert.verdict, Verdict::IdentityUpstairs);

    let d = compile_branched_cover(&spec).unwrap();
    assert_eq!(d.cover.chi_m, 4);
    assert_eq!(d.ambient, Ambient::Cp2BlownUp { blowups: 5 });
    assert_eq!(d.chi_branch, 10);
    assert!(check_cover_identity(&d));

    let mut seps = BTreeMap::new();
    seps.insert(1, 2);
    assert_eq!(signature_endo(2, 6, &seps).unwrap(), -4);
    println!("acceptance 3: PASS Matsumoto word: identity upstairs, χ=4, σ=-4, CP2#5CP2bar, χ(B)=10");
}

#[test]
fn criterion_04_extended_example() {
    let spec = matsumoto_extended_word();
    assert_eq!(spec.mu(), 16);
    assert_eq!(spec.count_separating(), 4);

    let d = compile_branched_cover(&spec).unwrap();
    assert_eq!(d.cover.chi_m, 12);
    assert_eq!(d.ambient, Ambient::Cp2BlownUp { blowups: 9 });
    assert_eq!(d.chi_branch, 8);
    // 2·χ(ambient) - χ(B) = χ(M') = χ(M) + σ
    assert_eq!(2 * 12 - 8, 16);
    assert_eq!(d.cover.chi_mprime, 16);
    assert_eq!(d.cover.chi_m + d.cover.blowdowns as i64, 16);

    let mut seps = BTreeMap::new();
    seps.insert(1, 4);
    assert_eq!(signature_endo(2, 12, &seps).unwrap(), -8);
    println!("acceptance 4: PASS extended word: χ=12, σ=-8, CP2#9CP2bar, χ(B)=8, 2·12-8=16=χ+σ");
}

#[test]
fn criterion_05_genus_two_parity_law() {
    let even = involution_power(2, 2);
    assert_eq!(even.mu(), 20);
    let d_even = compile_branched_cover(&even).unwrap();
    assert_eq!(d_even.ambient, Ambient::S2xS2);
    assert_eq!(d_even.parity, Some(Parity::Trivial));

    let odd = chain_power(2, 1);
    assert_eq!(odd.mu(), 30);
    let d_odd = compile_branched_cover(&odd).unwrap();
    assert_eq!(d_odd.ambient, Ambient::TwistedS2Bundle);
    assert_eq!(d_odd.parity, Some(Parity::Twisted));
    println!("acceptance 5: PASS genus-2 parity law: μ=20 → S2xS2, μ=30 → twisted bundle");
}

#[test]
fn criterion_06_adjunction_property_suite() {
    let mut rng = Rng(0x5eed_6);
    let mut cases = 0;
    for h in [1usize, 2, 3] {
        let blocks = [involution_power(h, 2).word, chain_power(h, 1).word];
        for _ in 0..40 {
            // concatenate 1..=2 relator blocks, transport each by a random braid
            let n_blocks = 1 + rng.below(2);
            let mut word: Vec<SymmetricCycle> = Vec::new();
            let mut order: Vec<usize> = (0..n_blocks).map(|_| rng.below(2)).collect();
            // permute block order
            if order.len() == 2 && rng.next() % 2 == 0 {
                order.swap(0, 1);
            }
            for &b in &order {
                let ulen = rng.below(5);
                let u = random_braid(&mut rng, 2 * h + 2, ulen);
                for c in &blocks[b] {
                    word.push(c.transported(&u));
                }
            }
            let spec = FibrationSpec::new(h, BaseSurface::Sphere, word);
            let cert = certify_global_monodromy(&spec);
            assert_eq!(cert.verdict, Verdict::IdentityUpstairs, "h={h}");
            let d = compile_branched_cover(&spec).unwrap();
            let a = (2 * h + 2) as i64;
            let divisor = 2 * (2 * h + 1);
            assert_eq!(spec.mu() % divisor, 0);
            let b = (spec.mu() / divisor) as i64;
            assert_eq!(2 - 2 * (a - 1) * (b - 1), d.chi_branch, "h={h} μ={}", spec.mu());
            // signature is integral on certified words and |σ| ≤ b₂ = χ - 2
            let sigma = signature_endo(h, spec.mu(), &BTreeMap::new()).unwrap();
            assert!(sigma.abs() <= d.cover.chi_m - 2, "h={h} μ={}", spec.mu());
            cases += 1;
        }
    }
    assert!(cases >= 100, "only {cases} cases generated");
    println!("acceptance 6: PASS adjunction identity 2-2(a-1)(b-1) = χ(B) on {cases} certified random words");
}

#[test]
fn criterion_07_milnor_and_resolution() {
    let m3 = milnor_data(3).unwrap();
    assert_eq!((m3.sphere_count, m3.chi_cover), (10, 11));
    let m5 = milnor_data(5).unwrap();
    assert_eq!((m5.sphere_count, m5.chi_cover), (36, 37));

    let r1 = resolution_data(1);
    assert_eq!(r1.blown_down_surface_square, -1);
    assert_eq!(r1.g, 1);
    assert_eq!(r1.chi_after, 0);
    println!("acceptance 7: PASS Milnor data n=3,5 and genus-1 resolution data exact");
}

#[test]
fn criterion_08_deform_resolve_round_trip() {
    for h in [2usize, 3] {
        for conj in [vec![], vec![4i64], vec![2, -3]] {
            let u = BraidWord::from_signed(2 * h + 2, &conj);
            let sep = SymmetricCycle::sep(h, 1).transported(&u);
            let mut word = vec![SymmetricCycle::arc(h, 2), sep, SymmetricCycle::arc(h, 4)];
            word.push(SymmetricCycle::arc(h, 2));
            let spec = FibrationSpec::new(h, BaseSurface::Disk, word);

            let before = is_trivial_downstairs(&downstairs_word(&spec));
            let deformed = deform_cycle(&spec, 1).unwrap();
            let mid = is_trivial_downstairs(&downstairs_word(&deformed));
            let resolved = resolve_block(&deformed, 1..13).unwrap();
            let after = is_trivial_downstairs(&downstairs_word(&resolved));

            assert_eq!(resolved, spec, "round trip failed h={h} conj={conj:?}");
            assert_eq!(before, mid, "deform changed the boundary class h={h}");
            assert_eq!(mid, after, "resolve changed the boundary class h={h}");
        }
    }

    // and on a certified word, where the invariant boundary class is trivial
    let spec = matsumoto_word();
    assert!(is_trivial_downstairs(&downstairs_word(&spec)));
    let deformed = deform_cycle(&spec, 1).unwrap();
    assert!(is_trivial_downstairs(&downstairs_word(&deformed)));
    assert_eq!(resolve_block(&deformed, 1..13).unwrap(), spec);

    println!("acceptance 8: PASS resolve∘deform = id and boundary triviality invariant (h=2,3; plain and conjugated)");
}

#[test]
fn criterion_09_kirby_emitter() {
    // golden handle data
    let base = gamma0_base_model(2);
    assert_eq!(base.dotted, 5);
    assert_eq!((base.framing(0), base.framing(1), base.lk(0, 1)), (-3, -3, 3));

    let ext = gamma0_extended_model(2, 1).unwrap();
    let framings: Vec<i64> = (0..ext.handles2.len()).map(|i| ext.framing(i)).collect();
    assert_eq!(framings, vec![-3, -3, -3, -3, -1, -1]);
    assert_eq!(ext.handles3, 1);
    assert_eq!(ext.dotted, 6);

    let golden = "\
dot\ndot\ndot\ndot\ndot\ndot\n\
h2 framing=-3 lk=[-3, 3, 0, 0, 0, 0] over=[0:+1, 1:+1, 2:+1, 3:+1, 4:+1]\n\
h2 framing=-3 lk=[3, -3, 0, 0, 0, 0] over=[0:+1, 1:+1, 2:+1, 3:+1, 4:+1]\n\
h2 framing=-3 lk=[0, 0, -3, 2, 1, 0] over=[0:+1, 1:+1, 5:-1]\n\
h2 framing=-3 lk=[0, 0, 2, -3, 0, 1] over=[0:+1, 1:+1, 5:+1]\n\
h2 framing=-1 lk=[0, 0, 1, 0, -1, -1] over=[]\n\
h2 framing=-1 lk=[0, 0, 0, 1, -1, -1] over=[]\n\
h3 x1\n";
    assert_eq!(ext.render(), golden);

    // simplification: exactly three blow-downs, bookkeeping exact at every step
    let (simplified, log) = simplify_model(&ext).unwrap();
    assert_eq!(simplified, gamma0_final_model(2, 1).unwrap());
    let blowdowns = log.iter().filter(|e| e.move_kind == MoveKind::BlowDown).count();
    assert_eq!(blowdowns, 3);
    for e in &log {
        match e.move_kind {
            MoveKind::BlowDown => {
                assert_eq!(e.chi_before - e.chi_after, 1);
                assert_eq!((e.signature_after - e.signature_before).abs(), 1);
            }
            MoveKind::CancelPair12 | MoveKind::CancelPair23 => {
                assert_eq!(e.chi_before, e.chi_after);
            }
            MoveKind::Slide => {
                assert_eq!(e.chi_before, e.chi_after);
                assert_eq!(e.signature_before, e.signature_after);
            }
        }
    }
    println!("acceptance 9: PASS kirby golden model and 3-blow-down simplification with exact bookkeeping");
}

#[test]
fn criterion_10_property_suite() {
    let mut rng = Rng(0x5eed_10);
    let n = 6;
    let h = 2;
    for _ in 0..200 {
        let len = rng.below(24);
        let w = random_braid(&mut rng, n, len);

        // Hurwitz action inverts exactly, from a random reachable state.
        let slen = rng.below(10);
        let scramble = random_braid(&mut rng, n, slen);
        let s = act_on_state(&scramble, &FreeGroupState::basepoint(n));
        assert_eq!(act_on_state(&w.inverse(), &act_on_state(&w, &s)), s);

        // symplectic outputs satisfy MᵀJM = J exactly
        let m = symplectic_of_braid(h, &w);
        assert!(m.is_symplectic());
        let cycle = SymmetricCycle::conjugated(
            hyperlef::fibration::CycleBase::ArcGenerator(1 + rng.below(5)),
            w.clone(),
        );
        assert!(symplectic_of_cycle(h, &cycle).is_symplectic());

        // normal form is invariant under single relation moves
        let moved = apply_random_relation_move(&mut rng, &w);
        assert_eq!(normal_form(&w), normal_form(&moved));
    }
    let _ = SymplecticMatrix::identity(2);
    println!("acceptance 10: PASS 200 random words: action inverts, MᵀJM=J, normal form relation-invariant");
}

/// Insert a cancelling pair, apply a far commutation, or a braid relation at
/// a random admissible position.
fn apply_random_relation_move(rng: &mut Rng, w: &BraidWord) -> BraidWord {
    let n = w.strands();
    let letters: Vec<Letter> = w.letters().to_vec();
    // try a swap of adjacent commuting letters, else a braid-relation triple,
    // else insert a cancelling pair
    let mut candidates: Vec<BraidWord> = Vec::new();
    for k in 0..letters.len().saturating_sub(1) {
        let (a, b) = (letters[k], letters[k + 1]);
        if a.index.abs_diff(b.index) >= 2 {
            let mut v = letters.clone();
            v.swap(k, k + 1);
            candidates.push(BraidWord::new(n, v));
        }
        if a.index.abs_diff(b.index) == 1 && !a.inverse && !b.inverse {
            if let Some(&c) = letters.get(k + 2) {
                if c.index == a.index && !c.inverse {
                    // σ_i σ_j σ_i → σ_j σ_i σ_j
                    let mut v = letters.clone();
                    v[k] = b;
                    v[k + 1] = a;
                    v[k + 2] = Letter::pos(b.index);
                    candidates.push(BraidWord::new(n, v));
                }
            }
        }
    }
    if candidates.is_empty() {
        let pos = rng.below(letters.len() + 1);
        let index = 1 + rng.below(n - 1);
        let mut v = letters.clone();
        v.insert(pos, Letter::neg(index));
        v.insert(pos, Letter::pos(index));
        return BraidWord::new(n, v);
    }
    let pick = rng.below(candidates.len());
    candidates.swap_remove(pick)
}
