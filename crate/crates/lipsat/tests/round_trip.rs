use lipsat::cli::render;
use lipsat::job::{CertifyJob, HypersurfaceJob, Job, SemigroupJob, SemigroupOp};
use lipsat::{JobSpec, OutputFormat};
use proptest::prelude::*;

fn check(job: Job) -> Result<(), TestCaseError> {
    let spec = JobSpec::new(job, OutputFormat::Json);
    let first = render(&spec);
    let again = JobSpec::from_document(&first.stdout).unwrap();
    prop_assert_eq!(&again, &spec);
    let second = render(&again);
    prop_assert_eq!(first, second);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hypersurface_outputs_round_trip(alpha in 0u64..6, beta in 0u64..10, big_n in 0u64..10) {
        check(Job::Hypersurface(HypersurfaceJob { alpha, beta, big_n, bounds: None }))?;
    }

    #[test]
    fn certificates_round_trip(beta in 1u64..8, big_n in 2u64..8, a in 0u64..4, b in 0u64..12) {
        check(Job::Certify(CertifyJob::Hypersurface { alpha: 2, beta, big_n, point: [a, b] }))?;
    }

    #[test]
    fn semigroup_outputs_round_trip(
        gens in prop::collection::vec(prop::collection::vec(0u64..8, 2), 1..4),
        op in prop::sample::select(vec![SemigroupOp::Mingens, SemigroupOp::Mult, SemigroupOp::Edim, SemigroupOp::Hull]),
    ) {
        check(Job::Semigroup(SemigroupJob { op, generators: gens, point: None }))?;
    }
}
