mod common;

use common::{ALL, UNDERIVABLE};
use foldbound::geometry::{
    boundary_start_headings, check_parity_labels, check_self_avoiding, render_fold,
    SelfAvoidanceViolation,
};
use foldbound::oracle::{Mismatch, Side};
use foldbound::words::fold_expansion_len;
use foldbound::{
    derive_boundary_system, expand_boundary, expand_fold, verify_boundary, BoundarySystem, DirWord,
    Error, ExpansionCap, FoldLetter, FoldWord, FoldingSystem, GridPoint, Heading, Parity,
};

#[test]
fn short_words_derive_or_fail_as_expected() {
    let mut derived = 0;
    for moves in 1..=4 {
        for w in FoldWord::enumerate(moves) {
            let text = w.to_string();
            let path = render_fold(&w, GridPoint::ORIGIN, Heading::East);
            assert!(check_self_avoiding(&path).is_ok(), "{text}");
            match derive_boundary_system(&FoldingSystem::new(w)) {
                Ok(tau) => {
                    assert!(!UNDERIVABLE.contains(&text.as_str()), "{text}");
                    for (_, p) in tau.entries() {
                        assert!(!p.contains_reverse(), "{text}");
                        p.check_alternation().unwrap();
                    }
                    derived += 1;
                }
                Err(Error::InvalidFoldingCurve { .. }) => {
                    assert!(UNDERIVABLE.contains(&text.as_str()), "{text}")
                }
                Err(e) => panic!("{text}: {e}"),
            }
        }
    }
    assert_eq!(derived, 30 - UNDERIVABLE.len());
}

#[test]
fn oracle_agrees_at_small_levels() {
    for r in ALL {
        let sys = r.system();
        let tau = derive_boundary_system(&sys).unwrap();
        let mut n = 0;
        while fold_expansion_len(&sys, n) <= 20_000 {
            let report = verify_boundary(&sys, &tau, n, ExpansionCap::default()).unwrap();
            assert!(
                report.passed(),
                "{} level {n}: {:?}",
                r.name,
                report.mismatch
            );
            assert_eq!(report.loops, 1);
            assert_eq!(
                report.loop_segments,
                report.left_segments + report.right_segments
            );
            assert!(report.loop_segments.is_multiple_of(2) && report.loop_segments >= 4);
            assert!(report.loop_segments <= 4 * report.fold_edges);
            n += 1;
        }
    }
}

#[test]
fn expanded_boundaries_carry_square_parities() {
    for r in ALL {
        let sys = r.system();
        let tau = derive_boundary_system(&sys).unwrap();
        let (left_heading, right_heading) = boundary_start_headings(Heading::East);
        for n in 0..=3 {
            let fold = expand_fold(&sys, FoldLetter::MoveA, n, ExpansionCap::default()).unwrap();
            let start = if fold.first() == FoldLetter::MoveA {
                Parity::Even
            } else {
                Parity::Odd
            };
            for (axiom, heading) in [("R", left_heading), ("L", right_heading)] {
                let w = expand_boundary(
                    &tau,
                    &DirWord::parse_finished(axiom).unwrap(),
                    n,
                    ExpansionCap::default(),
                )
                .unwrap();
                assert_eq!(
                    check_parity_labels(&w, GridPoint::ORIGIN, heading, start),
                    Ok(()),
                    "{} {axiom} level {n}",
                    r.name
                );
            }
        }
    }
}

#[test]
fn retraced_fold_is_rejected() {
    let w: FoldWord = "A+B+A+B+A".parse().unwrap();
    let path = render_fold(&w, GridPoint::ORIGIN, Heading::East);
    assert_eq!(
        check_self_avoiding(&path),
        Err(SelfAvoidanceViolation::EdgeReused { edge: 4, first: 0 })
    );
}

#[test]
fn corrupted_rule_is_located() {
    let sys = FoldingSystem::parse("A-B").unwrap();
    let corrupted = BoundarySystem::parse(["Ll", "S", "S", "Rr", "rL", "Rl"]).unwrap();
    let first_bad = (0..=6)
        .map(|n| verify_boundary(&sys, &corrupted, n, ExpansionCap::default()).unwrap())
        .find(|r| !r.passed())
        .expect("corruption is detected");
    assert_eq!(first_bad.level, 2);
    assert!(matches!(
        first_bad.mismatch,
        Some(Mismatch::ExtraSegment {
            side: Side::Left,
            ..
        })
    ));
}
