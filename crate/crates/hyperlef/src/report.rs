//! JSON report schema for the command-line front end.
//!
//! Serialization is byte-stable for a fixed input and schema version: field
//! order follows the struct declarations and no wall-clock data is
//! embedded.

use crate::branch::{BranchedCoverDescription, Parity};
use crate::certify::{IdentityCertificate, SymplecticValue, Verdict};
use crate::fibration::FibrationSpec;
use crate::invariants::signature_endo;
use crate::kirby::{MoveLog, MoveLogEntry};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub const SCHEMA_VERSION: u32 = 1;

/// FNV-1a 64-bit digest of the input text, hex encoded.
pub fn digest(text: &str) -> String {
    let mut hash: u64 = 0xcbf29ce484222325;
    for b in text.as_bytes() {
        hash ^= *b as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    format!("{hash:016x}")
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CertificateJson {
    pub permutation_trivial: bool,
    pub symplectic: String,
    pub action_inner: bool,
    pub verdict: String,
}

impl CertificateJson {
    pub fn from_certificate(c: &IdentityCertificate) -> Self {
        CertificateJson {
            permutation_trivial: c.permutation_trivial,
            symplectic: match c.symplectic_value {
                SymplecticValue::PlusIdentity => "plus_identity".into(),
                SymplecticValue::MinusIdentity => "minus_identity".into(),
                SymplecticValue::Other => "other".into(),
            },
            action_inner: c.action_inner,
            verdict: match c.verdict {
                Verdict::IdentityUpstairs => "identity_upstairs".into(),
                Verdict::HyperellipticInvolution => "hyperelliptic_involution".into(),
                Verdict::NotTrivial => "not_trivial".into(),
            },
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BandJson {
    pub cycle_index: usize,
    pub endpoints: (usize, usize),
    pub twist: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SepModelJson {
    pub cycle_index: usize,
    pub genus: usize,
    pub enclosed: Vec<usize>,
    pub handle_framings: (i64, i64),
    pub sphere_square: i64,
}

/// The branched-cover description in the stable JSON schema.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DescriptionJson {
    pub schema: u32,
    pub ambient: String,
    pub disks: usize,
    pub bands: Vec<BandJson>,
    pub sep_models: Vec<SepModelJson>,
    pub closure_braid: String,
    pub chi_branch: i64,
    #[serde(rename = "chi_M")]
    pub chi_m: i64,
    #[serde(rename = "chi_Mprime")]
    pub chi_mprime: i64,
    pub sigma_endo: Option<i64>,
    pub parity: Option<String>,
}

impl DescriptionJson {
    pub fn from_description(spec: &FibrationSpec, d: &BranchedCoverDescription) -> Self {
        use crate::cover::Classification;
        let bands = d
            .bands
            .iter()
            .map(|b| BandJson {
                cycle_index: b.cycle_index,
                endpoints: match &b.arc {
                    Classification::NonseparatingArc { endpoints } => *endpoints,
                    Classification::SeparatingLoop { .. } => unreachable!("bands are nonseparating"),
                },
                twist: "left_half_twist".into(),
            })
            .collect();
        let sep_models = d
            .sep_models
            .iter()
            .map(|s| match &s.loop_class {
                Classification::SeparatingLoop { genus, enclosed } => SepModelJson {
                    cycle_index: s.cycle_index,
                    genus: *genus,
                    enclosed: enclosed.iter().copied().collect(),
                    handle_framings: s.handle_framings,
                    sphere_square: s.sphere_square,
                },
                Classification::NonseparatingArc { .. } => unreachable!("models are separating"),
            })
            .collect();

        let spec = spec.canonicalized();
        let mut sep_counts: BTreeMap<usize, usize> = BTreeMap::new();
        for c in &spec.word {
            if let crate::fibration::CycleBase::SeparatingLoop(g) = c.base {
                *sep_counts.entry(g).or_insert(0) += 1;
            }
        }
        let sigma_endo = signature_endo(spec.genus, spec.count_nonseparating(), &sep_counts).ok();

        DescriptionJson {
            schema: SCHEMA_VERSION,
            ambient: d.ambient.to_string(),
            disks: d.disks,
            bands,
            sep_models,
            closure_braid: d.closure_braid.to_string(),
            chi_branch: d.chi_branch,
            chi_m: d.cover.chi_m,
            chi_mprime: d.cover.chi_mprime,
            sigma_endo,
            parity: d.parity.map(|p| match p {
                Parity::Trivial => "trivial".into(),
                Parity::Twisted => "twisted".into(),
            }),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct KirbyModelJson {
    pub genus: usize,
    pub separating_genus: usize,
    pub handle_list: Vec<String>,
    pub simplified_handle_list: Vec<String>,
    pub move_log: Vec<MoveEntryJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MoveEntryJson {
    pub move_kind: String,
    pub targets: Vec<String>,
    pub chi_before: i64,
    pub chi_after: i64,
    pub signature_before: i64,
    pub signature_after: i64,
}

impl MoveEntryJson {
    pub fn from_entry(e: &MoveLogEntry) -> Self {
        MoveEntryJson {
            move_kind: e.move_kind.to_string(),
            targets: e.targets.clone(),
            chi_before: e.chi_before,
            chi_after: e.chi_after,
            signature_before: e.signature_before,
            signature_after: e.signature_after,
        }
    }
}

pub fn move_log_json(log: &MoveLog) -> Vec<MoveEntryJson> {
    log.iter().map(MoveEntryJson::from_entry).collect()
}

/// The full run report: digest, certificate, optional description and
/// handle models.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunReport {
    pub schema: u32,
    pub input_digest: String,
    pub certificate: CertificateJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub description: Option<DescriptionJson>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub kirby_models: Vec<KirbyModelJson>,
}

/// Pretty JSON with a trailing newline; deterministic for fixed input.
pub fn to_json_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialization cannot fail");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::branch::compile_branched_cover;
    use crate::certify::certify_global_monodromy;
    use crate::words::matsumoto_word;

    #[test]
    fn digest_is_stable() {
        assert_eq!(digest("abc"), digest("abc"));
        assert_ne!(digest("abc"), digest("abd"));
        assert_eq!(digest(""), "cbf29ce484222325");
    }

    #[test]
    fn matsumoto_description_json_fields() {
        let spec = matsumoto_word();
        let d = compile_branched_cover(&spec).unwrap();
        let json = DescriptionJson::from_description(&spec, &d);
        assert_eq!(json.ambient, "CP2#5CP2bar");
        assert_eq!(json.chi_m, 4);
        assert_eq!(json.chi_mprime, 6);
        assert_eq!(json.chi_branch, 10);
        assert_eq!(json.sigma_endo, Some(-4));
        assert_eq!(json.parity, None);
        assert_eq!(json.bands.len(), 6);
        assert_eq!(json.sep_models.len(), 2);
        assert!(json.sep_models.iter().all(|s| s.genus == 1));
        assert!(json.sep_models.iter().all(|s| s.handle_framings == (-1, -2)));
        assert!(json.sep_models.iter().all(|s| s.sphere_square == -2));

        let text = to_json_string(&json);
        assert_eq!(text, to_json_string(&json));
        assert!(text.contains("\"schema\": 1"));
    }

    #[test]
    fn report_roundtrips_through_serde() {
        let spec = matsumoto_word();
        let cert = certify_global_monodromy(&spec);
        let report = RunReport {
            schema: SCHEMA_VERSION,
            input_digest: digest("x"),
            certificate: CertificateJson::from_certificate(&cert),
            description: None,
            kirby_models: vec![],
        };
        let text = to_json_string(&report);
        let back: RunReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back.certificate.verdict, "identity_upstairs");
    }
}
