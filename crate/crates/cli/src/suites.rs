//! The verification suites behind `baseloci verify`: certificates that
//! reproduce the worked examples number by number, and seeded property
//! sweeps for the structural laws.

use baseloci_core::base_loci::{
    b_minus_pullback_law, b_plus_pullback_law, BaseLocus, SplitBundle,
};
use baseloci_core::chern::{
    ch_split_bundle, ch_split_degrees, exp_lc, lc, lc_add, NumericalRing,
};
use baseloci_core::cohomology::{det_twist, lcounter_h0, SplitDegrees};
use baseloci_core::lattice::presets;
use baseloci_core::lattice::DivisorClass;
use baseloci_core::random::{random_psef_class, random_split_bundle, seeded_rng};
use baseloci_core::rat::{rat, ratio};
use baseloci_core::schur::{
    self, enumeration, homogeneous_product, kostka, num_standard_tableaux, partitions,
    tensor_power_decomposition, witness_exponents,
};
use baseloci_core::zariski::{decompose, Zariski};
use baseloci_core::Error;
use num_traits::Zero;

use crate::certificate::{Check, Provenance, VerificationCertificate};

/// Fixed default seed for the randomized suites; always printed.
pub const DEFAULT_SEED: u64 = 20260809;

fn x_class(l: i64, fb: i64, fp: i64) -> DivisorClass {
    presets::p2_double_blowup()
        .class_from_ints(&[l, fb, fp])
        .expect("rank 3")
}

fn locus(labels: &[&str]) -> BaseLocus {
    BaseLocus::curves(labels.iter().map(|s| s.to_string()))
}

/// The diminished-locus extension example: the loci of the sub and quotient
/// line bundles miss the second exceptional curve, which the middle class
/// picks up.
pub fn b_minus_example() -> Result<VerificationCertificate, Error> {
    let mut cert = VerificationCertificate::new("b-minus-example", None);

    let l_fb = x_class(1, 1, 0);
    let l_fb_fp = x_class(1, 1, 1);

    let z1 = decompose(&l_fb)?;
    let z1 = z1.decomposition().expect("L+F̄ is effective");
    cert.push(Check::compare(
        "Zariski positive part of L+F̄",
        Provenance::Stated,
        x_class(1, 0, 0).to_string(),
        z1.positive().to_string(),
    ));
    cert.push(Check::compare(
        "Zariski negative part of L+F̄",
        Provenance::Stated,
        "F̄:1".to_string(),
        format_negative(z1.negative()),
    ));

    let z2 = decompose(&l_fb_fp)?;
    let z2 = z2.decomposition().expect("L+F̄+F′ is effective");
    cert.push(Check::compare(
        "Zariski positive part of L+F̄+F′",
        Provenance::Derived,
        x_class(1, 0, 0).to_string(),
        z2.positive().to_string(),
    ));
    cert.push(Check::compare(
        "Zariski negative part of L+F̄+F′",
        Provenance::Derived,
        "F̄:1, F′:1".to_string(),
        format_negative(z2.negative()),
    ));

    let b1 = l_fb.b_minus()?;
    cert.push(Check::compare(
        "B-(L+F̄)",
        Provenance::Stated,
        locus(&["F̄"]),
        b1.clone(),
    ));
    let b2 = l_fb_fp.b_minus()?;
    cert.push(Check::compare(
        "B-(L+F̄+F′)",
        Provenance::Stated,
        locus(&["F̄", "F′"]),
        b2.clone(),
    ));
    let trivial = presets::p2_double_blowup().zero_class().b_minus()?;
    cert.push(Check::compare(
        "B-(O_X)",
        Provenance::Stated,
        BaseLocus::Empty,
        trivial.clone(),
    ));

    // the extension with sub O(L+F̄) and quotient O_X surjects onto
    // O(L+F̄+F′) away from F′, so its locus contains B-(L+F̄+F′); that set
    // is strictly larger than B-(sub) ∪ B-(quotient)
    let union = b1.union(&trivial);
    cert.push(Check::condition(
        "pathology: B-(L+F̄+F′) not within B-(L+F̄) ∪ B-(O_X)",
        Provenance::Stated,
        !b2.is_subset_of(&union),
    ));

    Ok(cert)
}

/// The augmented-locus extension example on the same surface, built around
/// the conic `C = 2L - F̄ - F′` and the ample class `A = 6L - 2F̄ - 3F′`.
pub fn b_plus_example() -> Result<VerificationCertificate, Error> {
    let mut cert = VerificationCertificate::new("b-plus-example", None);

    let c = x_class(2, -1, -1);
    let fb = x_class(0, 1, 0);
    let fp = x_class(0, 0, 1);

    cert.push(Check::compare(
        "(C·C)",
        Provenance::Stated,
        rat(3),
        c.intersect(&c)?,
    ));
    cert.push(Check::compare(
        "(C·F′)",
        Provenance::Stated,
        rat(0),
        c.intersect(&fp)?,
    ));
    cert.push(Check::compare(
        "(F′·F′)",
        Provenance::Stated,
        rat(-1),
        fp.intersect(&fp)?,
    ));
    cert.push(Check::compare(
        "(C·F̄)",
        Provenance::Stated,
        rat(1),
        c.intersect(&fb)?,
    ));
    let c_fb_2fp = x_class(2, 0, 1);
    cert.push(Check::compare(
        "((C+F̄+2F′)·F̄)",
        Provenance::Stated,
        rat(1),
        c_fb_2fp.intersect(&fb)?,
    ));

    let p = x_class(2, 0, 0); // C + F̄ + F′, the pullback of the conic
    cert.push(Check::condition(
        "P = C+F̄+F′ is nef",
        Provenance::Stated,
        p.is_nef(),
    ));
    cert.push(Check::compare(
        "(P·F̄)",
        Provenance::Stated,
        rat(0),
        p.intersect(&fb)?,
    ));
    cert.push(Check::compare(
        "(P·F′)",
        Provenance::Stated,
        rat(0),
        p.intersect(&fp)?,
    ));

    let z = decompose(&x_class(2, -1, 1))?; // C + 2F′
    let z = z.decomposition().expect("C+2F′ is effective");
    cert.push(Check::compare(
        "Zariski positive part of C+2F′",
        Provenance::Stated,
        c.to_string(),
        z.positive().to_string(),
    ));
    let z = decompose(&c_fb_2fp)?;
    let z = z.decomposition().expect("C+F̄+2F′ is effective");
    cert.push(Check::compare(
        "Zariski positive part of C+F̄+2F′",
        Provenance::Stated,
        p.to_string(),
        z.positive().to_string(),
    ));

    let a = x_class(6, -2, -3);
    cert.push(Check::condition(
        "A = 6L-2F̄-3F′ is ample",
        Provenance::Stated,
        a.is_ample(),
    ));
    cert.push(Check::compare(
        "(A·F̄)",
        Provenance::Stated,
        rat(1),
        a.intersect(&fb)?,
    ));

    let b_plus_middle = c_fb_2fp.b_plus()?;
    cert.push(Check::condition(
        "F̄ within B+(C+F̄+2F′)",
        Provenance::Stated,
        b_plus_middle.contains_curve("F̄"),
    ));
    cert.push(Check::compare(
        "B+(C+F̄+2F′)",
        Provenance::Derived,
        locus(&["F̄", "F′"]),
        b_plus_middle,
    ));
    let b_plus_sub = x_class(2, -1, 1).b_plus()?;
    cert.push(Check::condition(
        "F̄ not within B+(C+2F′)",
        Provenance::Stated,
        !b_plus_sub.contains_curve("F̄"),
    ));
    cert.push(Check::compare(
        "B+(C+2F′)",
        Provenance::Derived,
        locus(&["F′"]),
        b_plus_sub.clone(),
    ));
    cert.push(Check::compare(
        "B+(A)",
        Provenance::Trivial,
        BaseLocus::Empty,
        a.b_plus()?,
    ));

    // the extension with sub O(C+2F′) and quotient O(A) has O(C+F̄+2F′) as
    // a quotient, so F̄ sits inside its augmented locus while missing
    // B+(sub) ∪ B+(A)
    let union = b_plus_sub.union(&a.b_plus()?);
    cert.push(Check::condition(
        "pathology: F̄ within B+(C+F̄+2F′) but not within B+(C+2F′) ∪ B+(A)",
        Provenance::Stated,
        !union.contains_curve("F̄"),
    ));

    Ok(cert)
}

fn format_negative(negative: &std::collections::BTreeMap<String, baseloci_core::Rat>) -> String {
    if negative.is_empty() {
        return "(none)".into();
    }
    negative
        .iter()
        .map(|(label, mult)| format!("{label}:{mult}"))
        .collect::<Vec<_>>()
        .join(", ")
}

/// The vanishing sweep for the cubic-kernel bundle: no sections for any
/// symmetric power in the tested range, determinant degree 1, second Chern
/// class 7, and both degree bookkeepings for the left term negative.
pub fn l_counter(n_max: u32, l_max: u32) -> Result<VerificationCertificate, Error> {
    let mut cert = VerificationCertificate::new("l-counter", None);

    let mut vanishing = 0usize;
    let mut total = 0usize;
    let mut recomputed_left_negative = 0usize;
    let mut stated_left_negative = 0usize;
    for n in 2..=n_max {
        for ell in 1..=l_max {
            total += 1;
            let step = lcounter_h0(n, ell)?;
            if step.h0_quotient.is_zero() {
                vanishing += 1;
            }
            // left degree read off the displayed resolution
            if step.left_degree() == ell as i64 - (n * ell) as i64 - 3
                && step.left_degree() < 0
            {
                recomputed_left_negative += 1;
            }
            // alternate bookkeeping for the same term; also negative here,
            // so the vanishing conclusion does not depend on the choice
            if 2 * ell as i64 - (n * ell) as i64 - 4 < 0 {
                stated_left_negative += 1;
            }
        }
    }
    cert.push(Check::sweep(
        format!("h0(S^(n*l)E(l)) = 0 for 2 <= n <= {n_max}, 1 <= l <= {l_max}"),
        Provenance::Stated,
        vanishing,
        total,
    ));
    cert.push(Check::sweep(
        "left term degree l-n*l-3 (from the resolution) is negative",
        Provenance::Derived,
        recomputed_left_negative,
        total,
    ));
    cert.push(Check::sweep(
        "alternate left-degree bookkeeping 2l-n*l-4 is also negative",
        Provenance::Stated,
        stated_left_negative,
        total,
    ));

    cert.push(Check::compare(
        "determinant degree of the twisted dual kernel",
        Provenance::Stated,
        1i64,
        det_twist(2, 3, -1),
    ));

    // Chern pipeline: ch(E) from the defining sequence
    let ring = NumericalRing::projective_space(2)?;
    let ch_o3 = ch_split_degrees(&SplitDegrees::line(2, 3))?;
    let ch_m = ring.scalar(rat(3)).sub(&ch_o3);
    let e = ch_m
        .dual()
        .mul(&ring.degree_one(vec![rat(-1)])?.exp_nilpotent());
    let c1 = e.component(1)[0].clone();
    cert.push(Check::compare(
        "c1(E) from the Chern pipeline",
        Provenance::Derived,
        rat(1),
        c1.clone(),
    ));
    let ch2 = e.component(2)[0].clone();
    cert.push(Check::compare(
        "ch2(E)",
        Provenance::Derived,
        ratio(-13, 2),
        ch2.clone(),
    ));
    let c2 = (&c1 * &c1 - rat(2) * ch2) / rat(2);
    cert.push(Check::compare("c2(E)", Provenance::Derived, rat(7), c2));

    Ok(cert)
}

/// Pullback laws along the bundled blow-down for the line bundles `O(dL)`.
pub fn pullback_suite() -> Result<VerificationCertificate, Error> {
    let mut cert = VerificationCertificate::new("pullback", None);
    let f = presets::blowdown_to_p2();

    cert.push(Check::compare(
        "nonfinite locus of the blow-down",
        Provenance::Stated,
        locus(&["F̄", "F′"]),
        f.nonfinite_locus(),
    ));

    for d in -2i64..=5 {
        let e = SplitBundle::untwisted(vec![f.target().class_from_ints(&[d])?])?;
        let plus = b_plus_pullback_law(&f, &e)?;
        cert.push(Check::compare(
            format!("B+(f*({d}L)) = preimage ∪ contracted curves"),
            Provenance::Derived,
            plus.predicted.clone(),
            plus.pulled_back.clone(),
        ));
        let minus = b_minus_pullback_law(&f, &e)?;
        cert.push(Check::compare(
            format!("B-(f*({d}L)) = preimage"),
            Provenance::Derived,
            minus.predicted.clone(),
            minus.pulled_back.clone(),
        ));
    }
    Ok(cert)
}

/// Zariski structural invariants, idempotence and scaling on seeded random
/// pseudoeffective classes of the double blow-up.
pub fn zariski_properties(seed: u64, count: usize) -> Result<VerificationCertificate, Error> {
    let mut cert = VerificationCertificate::new("zariski-properties", Some(seed));
    let x = presets::p2_double_blowup();
    let nef_pool = [x_class(1, 0, 0), x_class(2, -1, -1)];
    let mut rng = seeded_rng(seed);

    let mut invariants_ok = 0;
    let mut idempotent = 0;
    let mut scaling_ok = 0;
    for _ in 0..count {
        let d = random_psef_class(&mut rng, &x, &nef_pool);
        let z = match decompose(&d)? {
            Zariski::Decomposition(z) => z,
            Zariski::NotPseudoeffective => continue,
        };
        if z.verify_invariants().is_ok() {
            invariants_ok += 1;
        }
        if let Zariski::Decomposition(again) = decompose(z.positive())? {
            if again.positive() == z.positive() && again.negative().is_empty() {
                idempotent += 1;
            }
        }
        let c = ratio(3, 2);
        if let Zariski::Decomposition(scaled) = decompose(&d.scale(&c))? {
            let positive_scales = scaled.positive() == &z.positive().scale(&c);
            let negative_scales = scaled.negative().len() == z.negative().len()
                && z
                    .negative()
                    .iter()
                    .all(|(label, mult)| scaled.negative().get(label) == Some(&(mult * &c)));
            if positive_scales && negative_scales {
                scaling_ok += 1;
            }
        }
    }
    cert.push(Check::sweep(
        "all five decomposition invariants hold",
        Provenance::Derived,
        invariants_ok,
        count,
    ));
    cert.push(Check::sweep(
        "decomposing the positive part returns it unchanged",
        Provenance::Derived,
        idempotent,
        count,
    ));
    cert.push(Check::sweep(
        "decomposition scales with the input",
        Provenance::Derived,
        scaling_ok,
        count,
    ));
    Ok(cert)
}

/// The four base-locus laws on seeded random split bundles with rational
/// twists.
pub fn base_loci_laws(seed: u64, count: usize) -> Result<VerificationCertificate, Error> {
    let mut cert = VerificationCertificate::new("base-loci-laws", Some(seed));
    let x = presets::p2_double_blowup();
    let mut rng = seeded_rng(seed);

    let mut direct_sum = 0;
    let mut chain = 0;
    let mut homogeneity = 0;
    let mut tensor = 0;
    for _ in 0..count {
        let e = random_split_bundle(&mut rng, &x, 3);
        let f = SplitBundle::new(
            random_split_bundle(&mut rng, &x, 3).summands().to_vec(),
            e.twist().clone(),
        )?;

        let e_minus = e.b_minus()?;
        let e_plus = e.b_plus()?;
        let f_minus = f.b_minus()?;
        let f_plus = f.b_plus()?;

        let sum = e.direct_sum(&f)?;
        if sum.b_minus()? == e_minus.union(&f_minus) && sum.b_plus()? == e_plus.union(&f_plus)
        {
            direct_sum += 1;
        }

        if e_minus.is_subset_of(&e_plus) {
            chain += 1;
        }

        let mut powers_agree = true;
        for c in [2u32, 3] {
            let power = e.sym_power(c);
            powers_agree &= power.b_minus()? == e_minus && power.b_plus()? == e_plus;
        }
        if powers_agree {
            homogeneity += 1;
        }

        let product = e.tensor(&f)?;
        if product.b_minus()?.is_subset_of(&e_minus.union(&f_minus))
            && product.b_plus()?.is_subset_of(&e_plus.union(&f_minus))
        {
            tensor += 1;
        }
    }
    cert.push(Check::sweep(
        "direct sums: locus of the sum is the union of the loci",
        Provenance::Derived,
        direct_sum,
        count,
    ));
    cert.push(Check::sweep(
        "inclusion chain: diminished locus within augmented locus",
        Provenance::Derived,
        chain,
        count,
    ));
    cert.push(Check::sweep(
        "homogeneity: S^2 and S^3 leave both loci unchanged",
        Provenance::Derived,
        homogeneity,
        count,
    ));
    cert.push(Check::sweep(
        "tensor products: locus within B±(E) ∪ B-(F)",
        Provenance::Derived,
        tensor,
        count,
    ));
    Ok(cert)
}

/// Chern character laws on seeded random split pairs, the closed degree-2
/// expression for rank-2 bundles, and the numerical non-invariance witness.
pub fn chern_laws(seed: u64, count: usize) -> Result<VerificationCertificate, Error> {
    let mut cert = VerificationCertificate::new("chern-laws", Some(seed));
    let mut rng = seeded_rng(seed);

    let mut multiplicative = 0;
    let mut additive = 0;
    let mut inverted = 0;
    for case in 0..count {
        // alternate between the plane and the double blow-up
        let lattice = if case % 2 == 0 {
            presets::p2()
        } else {
            presets::p2_double_blowup()
        };
        let e = random_split_bundle(&mut rng, &lattice, 3);
        let f = random_split_bundle(&mut rng, &lattice, 3);
        let che = ch_split_bundle(&e)?;
        let chf = ch_split_bundle(&f)?;
        let chef = ch_split_bundle(&e.tensor(&f)?)?;
        if chef == che.mul(&chf) {
            multiplicative += 1;
        }
        match (lc(&che), lc(&chf), lc(&chef)) {
            (Ok(le), Ok(lf), Ok(lef)) => {
                if lc_add(&le, &lf)? == lef {
                    additive += 1;
                }
                if exp_lc(&le) == che && exp_lc(&lf) == chf {
                    inverted += 1;
                }
            }
            _ => {}
        }
    }
    cert.push(Check::sweep(
        "ch(E⊗F) = ch(E)·ch(F)",
        Provenance::Derived,
        multiplicative,
        count,
    ));
    cert.push(Check::sweep(
        "lc(E⊗F) = lc(E) ⊞ lc(F)",
        Provenance::Derived,
        additive,
        count,
    ));
    cert.push(Check::sweep(
        "exp_lc inverts lc",
        Provenance::Derived,
        inverted,
        count,
    ));

    // closed degree-2 expression for rank-2 split bundles
    let mut formula = 0;
    let mut formula_total = 0;
    for a in -3i64..=3 {
        for b in -3i64..=3 {
            formula_total += 1;
            let split = SplitDegrees::new(2, vec![(a, 1), (b, 1)])?;
            let l = lc(&ch_split_degrees(&split)?)?;
            if l.higher().component(2) == [ratio((a - b) * (a - b), 8)] {
                formula += 1;
            }
        }
    }
    cert.push(Check::sweep(
        "degree-2 part of lc(O(a)⊕O(b)) equals (a-b)²/8",
        Provenance::Derived,
        formula,
        formula_total,
    ));

    // equal Chern characters, different positivity
    let split_a = SplitDegrees::new(1, vec![(1, 1), (-1, 1)])?;
    let split_b = SplitDegrees::new(1, vec![(0, 2)])?;
    cert.push(Check::condition(
        "witness: ch(O(1)⊕O(-1)) = ch(O⊕O) on the line",
        Provenance::Stated,
        ch_split_degrees(&split_a)? == ch_split_degrees(&split_b)?,
    ));
    let p1 = presets::projective_line();
    let mixed = SplitBundle::untwisted(vec![
        p1.class_from_ints(&[1])?,
        p1.class_from_ints(&[-1])?,
    ])?;
    let trivial = SplitBundle::untwisted(vec![p1.zero_class(), p1.zero_class()])?;
    cert.push(Check::condition(
        "witness: O(1)⊕O(-1) is not V-psef but O⊕O is",
        Provenance::Stated,
        !mixed.is_v_psef()? && trivial.is_v_psef()?,
    ));

    Ok(cert)
}

/// The exhaustive Schur-combinatorics sweeps.
pub fn schur_suite() -> Result<VerificationCertificate, Error> {
    let mut cert = VerificationCertificate::new("schur-suite", None);

    let mut checksum = 0;
    let mut checksum_total = 0;
    for r in 1..=4u32 {
        for n in 1..=8u32 {
            checksum_total += 1;
            let total: u64 = tensor_power_decomposition(n, r)
                .iter()
                .map(|s| s.tableau_multiplicity * s.dimension_at_rank(r))
                .sum();
            if total == (r as u64).pow(n) {
                checksum += 1;
            }
        }
    }
    cert.push(Check::sweep(
        "tensor power checksum: Σ f·dim = r^n for n ≤ 8, r ≤ 4",
        Provenance::Derived,
        checksum,
        checksum_total,
    ));

    let mut hooks = 0;
    let mut hooks_total = 0;
    for n in 1..=6u32 {
        for shape in partitions(n, n as usize) {
            hooks_total += 1;
            if num_standard_tableaux(&shape) == enumeration::count_standard_tableaux(&shape) {
                hooks += 1;
            }
        }
    }
    cert.push(Check::sweep(
        "hook length formula matches tableau enumeration for weight ≤ 6",
        Provenance::Derived,
        hooks,
        hooks_total,
    ));

    let mut kostka_ok = 0;
    let mut kostka_total = 0;
    for n in 1..=6u32 {
        for shape in partitions(n, n as usize) {
            for content in partitions(n, n as usize) {
                kostka_total += 1;
                let tableaux = kostka(&shape, content.parts())?;
                let pieri = homogeneous_product(content.parts()).coefficient(&shape);
                if tableaux == pieri {
                    kostka_ok += 1;
                }
            }
        }
    }
    cert.push(Check::sweep(
        "Kostka numbers: tableau counts match Pieri coefficients for weight ≤ 6",
        Provenance::Derived,
        kostka_ok,
        kostka_total,
    ));

    let mut pieri_ok = 0;
    let mut pieri_total = 0;
    for r in 1..=4u32 {
        for n in 1..=8u32 {
            for shape in partitions(n, r as usize) {
                pieri_total += 1;
                if schur::pieri_summand_certificate(&shape, r)? >= 1 {
                    pieri_ok += 1;
                }
            }
        }
    }
    cert.push(Check::sweep(
        "Pieri summand certificate ≥ 1 for weight ≤ 8, rank ≤ 4",
        Provenance::Derived,
        pieri_ok,
        pieri_total,
    ));

    let mut witness_ok = 0;
    let mut witness_total = 0;
    for big_m in 1..=5u32 {
        for q in 1..=5u32 {
            for m in 1..=5u32 {
                let weight = big_m * q;
                for shape in partitions(weight, weight as usize) {
                    witness_total += 1;
                    let w = witness_exponents(&shape, m, q, big_m)?;
                    if w.lhs == w.rhs && w.lhs >= rat(big_m as i64) {
                        witness_ok += 1;
                    }
                }
            }
        }
    }
    cert.push(Check::sweep(
        "exponent identity 2M - mΣa = M + Σb/q ≥ M, exhaustive for M,q,m ≤ 5",
        Provenance::Derived,
        witness_ok,
        witness_total,
    ));

    Ok(cert)
}

/// Every suite in order, for `verify all`.
pub fn all_suites(
    seed: u64,
    n_max: u32,
    l_max: u32,
) -> Result<Vec<VerificationCertificate>, Error> {
    Ok(vec![
        b_minus_example()?,
        b_plus_example()?,
        l_counter(n_max, l_max)?,
        schur_suite()?,
        zariski_properties(seed, 200)?,
        base_loci_laws(seed, 100)?,
        pullback_suite()?,
        chern_laws(seed, 100)?,
    ])
}
