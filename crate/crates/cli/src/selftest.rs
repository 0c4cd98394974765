//! Fast end-to-end checks that exercise every module once.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use tfx_core::bounds::{c5_blowup_inequality, chi4_bound, d2ge4_bound, BoundId, Rational};
use tfx_core::constructions::{g_family_all, grotzsch, h_n};
use tfx_core::invariants::{
    chromatic_number, is_bipartite, is_triangle_free, odd_cycle_transversal,
};
use tfx_core::lemmas::greedy_bipartization;
use tfx_core::report::{invariant_report, ReportItem};
use tfx_core::search::{verify_theorem, SearchConfig, Verdict};
use tfx_core::{canonical_form, Error};

fn check(name: &str, outcome: Result<String, String>) -> ReportItem {
    match outcome {
        Ok(detail) => ReportItem::Check {
            name: name.to_string(),
            passed: true,
            detail,
        },
        Err(detail) => ReportItem::Check {
            name: name.to_string(),
            passed: false,
            detail,
        },
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

pub fn run(seed: u64, cfg: &SearchConfig) -> Vec<ReportItem> {
    let mut rng = StdRng::seed_from_u64(seed);
    vec![
        check("grotzsch", grotzsch_facts()),
        check("mantel 4..8", verify_range(BoundId::Mantel, 4, 8, cfg)),
        check(
            "erdos_andrasfai 5..8",
            verify_range(BoundId::ErdosAndrasfai, 5, 8, cfg),
        ),
        check("g-family 12..16", g_family(12, 16)),
        check("h_n 20..24", h_family(20, 24)),
        check("relabelled grotzsch", relabellings(&mut rng, 50)),
        check("c5 blow-up inequality", inequality(&mut rng, 500)),
        check("bipartization n=100", bipartize(100)),
    ]
}

fn grotzsch_facts() -> Result<String, String> {
    let g = grotzsch();
    let rep = invariant_report(&g);
    rep.audit(&g)?;
    if (rep.n, rep.e, rep.triangle_free, rep.chi) != (11, 20, true, Some(4)) {
        return Err(format!(
            "unexpected invariants: n={} e={} chi={:?}",
            rep.n, rep.e, rep.chi
        ));
    }
    Ok("n=11 e=20 chi=4".into())
}

fn verify_range(
    bound: BoundId,
    from: usize,
    to: usize,
    cfg: &SearchConfig,
) -> Result<String, String> {
    for (n, outcome) in verify_theorem(bound, None, from..=to, cfg) {
        let rep = outcome.map_err(err)?;
        if rep.verdict != Some(Verdict::BoundMetWithEquality) || rep.family_check != Some(true) {
            return Err(format!(
                "n={n}: verdict {:?}, family check {:?}",
                rep.verdict, rep.family_check
            ));
        }
    }
    Ok("equality with extremal witnesses".into())
}

fn g_family(from: usize, to: usize) -> Result<String, String> {
    let mut members = 0;
    for n in from..=to {
        for g in g_family_all(n) {
            members += 1;
            let chi = chromatic_number(&g).map_err(err)?.chi;
            if g.edge_count() as u64 != chi4_bound(n) || !is_triangle_free(&g) || chi != 4 {
                return Err(format!(
                    "member at n={n} fails (e={}, chi={chi})",
                    g.edge_count()
                ));
            }
        }
    }
    Ok(format!("{members} members certified"))
}

fn h_family(from: usize, to: usize) -> Result<String, String> {
    for n in from..=to {
        let g = h_n(n).map_err(err)?;
        let d2 = odd_cycle_transversal(&g).map_err(err)?.d2;
        if g.edge_count() as u64 != d2ge4_bound(n) || d2 != 4 {
            return Err(format!("n={n}: e={} d2={d2}", g.edge_count()));
        }
    }
    Ok("edge counts and d2=4 confirmed".into())
}

fn relabellings(rng: &mut StdRng, rounds: usize) -> Result<String, String> {
    let g = grotzsch();
    let form = canonical_form(&g);
    let mut perm: Vec<usize> = (0..g.n()).collect();
    for _ in 0..rounds {
        perm.shuffle(rng);
        let h = g.permute(&perm);
        if canonical_form(&h) != form {
            return Err(format!("canonical form changed under {perm:?}"));
        }
        invariant_report(&h).audit(&h)?;
    }
    Ok(format!("{rounds} relabellings agree"))
}

fn inequality(rng: &mut StdRng, rounds: usize) -> Result<String, String> {
    let mut equalities = 0;
    for _ in 0..rounds {
        let z: [Rational; 5] =
            std::array::from_fn(|_| Rational::new(rng.gen_range(1..=40), rng.gen_range(1..=12)));
        let min = *z.iter().min().expect("five weights");
        let z0 = min * Rational::new(rng.gen_range(0..=8), 8);
        let c = c5_blowup_inequality(z, z0).map_err(err)?;
        if !c.holds {
            return Err(format!("fails at z={z:?} z0={z0}"));
        }
        equalities += c.is_equality() as usize;
    }
    Ok(format!("{rounds} tuples hold, {equalities} equalities"))
}

fn bipartize(n: usize) -> Result<String, String> {
    let mut worst = 0;
    for g in g_family_all(n).take(20) {
        let trace = greedy_bipartization(&g).map_err(err)?;
        if trace.deleted.len() > 15 || !is_bipartite(&trace.residual).is_bipartite() {
            return Err(format!("deleted {} vertices", trace.deleted.len()));
        }
        worst = worst.max(trace.deleted.len());
    }
    Ok(format!("at most {worst} deletions"))
}
