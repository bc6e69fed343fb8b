use gsforge_core::corpus::examples;
use gsforge_core::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn random_word(rng: &mut ChaCha8Rng, alphabet: usize, lo: usize, hi: usize) -> Word {
    let n = rng.gen_range(lo..=hi);
    Word::new((0..n).map(|_| rng.gen_range(0..alphabet)).collect())
}

#[test]
fn dropping_and_restoring_relations_keeps_the_series() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let g = GeneratorSet::new(["x", "y", "z"]).unwrap();
        let d = DegreeFunction::from_integers(&g, &[rng.gen_range(1..4), 1, rng.gen_range(1..3)])
            .unwrap();
        let rels: Vec<NcPolynomial> = (0..rng.gen_range(1..6))
            .map(|_| NcPolynomial::word(random_word(&mut rng, 3, 1, 4)))
            .collect();
        let p = Presentation::new(g, d, rels).unwrap();
        let keep: Vec<usize> = (0..p.relations().len())
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        let dropped: Vec<NcPolynomial> = (0..p.relations().len())
            .filter(|i| !keep.contains(i))
            .map(|i| p.relations()[i].clone())
            .collect();
        let restored = p
            .drop_relations(&keep)
            .unwrap()
            .add_relations(dropped)
            .unwrap();
        assert_eq!(gs_series(&restored), gs_series(&p));
    }
}

#[test]
fn elimination_never_weakens_the_certificate() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut strengthened = 0;
    for _ in 0..100 {
        let g = GeneratorSet::new(["x", "y", "v"]).unwrap();
        let d = DegreeFunction::from_integers(&g, &[1, rng.gen_range(1..3), rng.gen_range(1..5)])
            .unwrap();
        let target = random_word(&mut rng, 2, 1, 3);
        let mut rels = vec![&NcPolynomial::word(Word::letter(2)) - &NcPolynomial::word(target)];
        rels.extend(
            (0..rng.gen_range(0..4)).map(|_| NcPolynomial::word(random_word(&mut rng, 2, 2, 5))),
        );
        let p = Presentation::new(g, d, rels).unwrap();
        let e = p.eliminate_generator(2, 0).unwrap();
        let before = certify(&p).unwrap();
        let after = certify(&e).unwrap();
        assert!(
            after.status.strength() >= before.status.strength(),
            "{} then {}",
            before.status,
            after.status
        );
        strengthened += usize::from(after.status.strength() > before.status.strength());
    }
    assert!(strengthened > 0);
}

#[test]
fn elimination_rejects_the_counterexample_shape() {
    let f =
        parse("generators x=1 y=1 v=3\nrelations\n v - x*y\n v^2*x\n v^2*y\n x*v^2\nend").unwrap();
    let p = &f.presentation;
    assert!(matches!(
        p.eliminate_generator(2, 0),
        Err(AlgebraError::GeneratorStillUsed { .. })
    ));
}

#[test]
fn parsed_files_drive_every_analysis() {
    let f = parse("algebra A1\ngenerators x=1 y=1\nrelations\n x^2\n x*y*x\nend").unwrap();
    let p = f.finite_presentation().unwrap();
    let h = hilbert_truncation(&p, &q(5, 1)).unwrap();
    assert_eq!(
        h.dimensions(),
        [1u32, 2, 3, 4, 6, 9].map(BigUint::from).to_vec()
    );
    assert_eq!(
        classify_growth(&p, &q(8, 1)).unwrap().growth,
        Growth::Exponential
    );
    assert_eq!(verify_vinberg(&p, 10).unwrap().verdict, Verdict::Holds);

    let fam = parse("generators x=1 y=1\nrelations\n x*x\nfamily t from 1\n x*y^t*x\nend").unwrap();
    let spec = fam.limit_spec();
    assert_eq!(instantiate(&spec, 1).relations(), p.relations());
    assert_eq!(limit_closed_eval(&spec, &q(1, 2)).unwrap(), q(1, 2));
}

#[test]
fn rescaling_chain_holds_on_the_corpus() {
    for e in examples() {
        let Some(p) = e.file().finite_presentation() else {
            continue;
        };
        if !p.degrees().is_integral() {
            continue;
        }
        let r = verify_degree_rescaling(&p, 6).unwrap();
        assert!(
            r.holds,
            "{}: first violation {:?}",
            e.key, r.first_violation
        );
    }
}

#[test]
fn noncommutative_relations_report_associated_graded() {
    let f = parse("generators x=1 y=1\nrelations\n x*y - y*x - x*x\nend").unwrap();
    let r = gsforge_core::report::hilbert_report(&f, &q(6, 1)).unwrap();
    assert!(r.flags.iter().any(|x| x == "associated-graded"));
    let dims: Vec<String> = r
        .hilbert
        .unwrap()
        .into_iter()
        .map(|h| h.dimension)
        .collect();
    assert_eq!(dims, ["1", "2", "3", "4", "5", "6", "7"]);
}
