//! Rank certification of the fiber maps and the spinor splittings.

use rand_chacha::ChaCha8Rng;

use crate::fiber::SpinKind;
use crate::fields::{random_shaped, sample_config, Background, FieldName};
use crate::report::Recorder;
use crate::scalars::GaussianRational as Q;
use crate::structure::ranks::{expected_patterns, random_coframe, rank_certify, Arrow};
use crate::structure::splittings::{alpha, alpha_beta_dimensions, beta, kappa, kappa_dimensions, varkappa};
use crate::clifford::gamma::gamma_power;

use super::{residual, CaseParams, CaseResult};

fn arrow_word(a: Arrow) -> &'static str {
    match a {
        Arrow::Injective => "injective",
        Arrow::Surjective => "surjective",
        Arrow::Bijective => "bijective",
    }
}

/// Every map of the diagram and the isomorphism lemmata on one coframe.
pub(super) fn diagram_ranks(rec: &mut Recorder, rng: &mut ChaCha8Rng) -> CaseResult {
    let e = random_coframe(rng);
    for (map, arrow) in expected_patterns() {
        let cert = rank_certify(map, &e)?;
        rec.holds(
            &format!("rank:{}", map.label()),
            &format!("{} is {}", map.label(), arrow_word(arrow)),
            cert.matches(arrow),
            || format!("{}: rank {} of {} -> {}", map.label(), cert.rank, cert.domain_dim, cert.codomain_dim),
        );
    }
    Ok(())
}

/// Reconstruction, kernel conditions and uniqueness for both splittings.
pub(super) fn splittings(rec: &mut Recorder, rng: &mut ChaCha8Rng, params: &CaseParams) -> CaseResult {
    let cfg = sample_config(rng, &params.plan(&[FieldName::E]));
    let bg = Background::new(&cfg)?;
    let pools = params.pools();
    let pool = Some(pools.psi.as_slice()).filter(|p| !p.is_empty());
    let k = params.jet_order;
    let g3 = gamma_power(3);
    let e = &cfg.e;
    let egbar = (e * &bg.gbar).scale(&Q::i());

    let theta = random_shaped(rng, (3, 1, SpinKind::Column), pool, k);
    let a = alpha(&bg, &theta)?;
    let b = beta(&bg, &theta)?;
    rec.zero("alpha_beta:sum", "theta = i e gbar alpha + beta", "theta", &residual(&theta, &(&egbar * &a).add(&b)));
    rec.zero("alpha_beta:kernel", "g3 beta = 0", "beta", &(&g3 * &b));
    let a0 = random_shaped(rng, (1, 0, SpinKind::Column), pool, k);
    let image = &egbar * &a0;
    rec.zero("alpha_beta:image", "alpha(i e gbar a) = a", "alpha", &residual(&alpha(&bg, &image)?, &a0));
    rec.zero("alpha_beta:image_beta", "beta(i e gbar a) = 0", "beta", &beta(&bg, &image)?);

    let theta = random_shaped(rng, (2, 1, SpinKind::Column), pool, k);
    let kp = kappa(&bg, &theta)?;
    let vk = varkappa(&bg, &theta)?;
    rec.zero("kappa:sum", "theta = e kappa + varkappa", "theta", &residual(&theta, &(e * &kp).add(&vk)));
    rec.zero("kappa:kernel", "gbar g3 varkappa = 0", "varkappa", &(&(&bg.gbar * &g3) * &vk));
    let k0 = random_shaped(rng, (1, 0, SpinKind::Column), pool, k);
    let image = e * &k0;
    rec.zero("kappa:image", "kappa(e k) = k", "kappa", &residual(&kappa(&bg, &image)?, &k0));
    rec.zero("kappa:image_varkappa", "varkappa(e k) = 0", "varkappa", &varkappa(&bg, &image)?);

    let d = alpha_beta_dimensions(&bg)?;
    rec.holds("alpha_beta:unique", "image of i e gbar and ker g3 are complementary in the (3,1) fiber", d.unique(), || format!("{d:?}"));
    let d = kappa_dimensions(&bg)?;
    rec.holds("kappa:unique", "image of e and ker gbar g3 are complementary in the (2,1) fiber", d.unique(), || format!("{d:?}"));
    Ok(())
}
