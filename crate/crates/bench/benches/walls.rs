use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use wallkit::moduli::solve_extension_case;
use wallkit::oracle::{scan_walls_auto, verify_sign_law, SignLaw};
use wallkit::{
    chambers, classify, enumerate_walls, Case, DivClass, Polarization, Rational, SurfaceGeom,
};

const SF: DivClass = DivClass::SIGMA_PLUS_FIBER;

fn enumeration(c: &mut Criterion) {
    let g = SurfaceGeom::new(1);
    let mut group = c.benchmark_group("walls");
    for c2 in [4i64, 8, 16] {
        group.bench_with_input(BenchmarkId::new("enumerate", c2), &c2, |b, &c2| {
            b.iter(|| enumerate_walls(3, SF, black_box(c2), g))
        });
        group.bench_with_input(BenchmarkId::new("scan", c2), &c2, |b, &c2| {
            b.iter(|| scan_walls_auto(3, SF, black_box(c2), g))
        });
    }
    group.finish();
}

fn chamber_deck(c: &mut Criterion) {
    let g = SurfaceGeom::new(0);
    c.bench_function("chambers/c2=12", |b| {
        b.iter(|| chambers(3, SF, black_box(12), g))
    });
}

fn verdicts(c: &mut Criterion) {
    let g = SurfaceGeom::new(2);
    let ls: Vec<Polarization> = (1..=40)
        .map(|k| Polarization::from_slope(Rational::new(2 * 8 + k, 8), g).unwrap())
        .collect();
    c.bench_function("classify/40-slopes", |b| {
        b.iter(|| {
            ls.iter()
                .filter(|l| classify(SF, 9, l, g).unwrap().is_nonempty())
                .count()
        })
    });
}

fn extension(c: &mut Criterion) {
    let g = SurfaceGeom::new(1);
    let c2 = 7;
    let walls = enumerate_walls(3, SF, c2, g);
    let w = walls.find(DivClass::new(1, -8)).expect("flag wall").clone();
    let l2 = Polarization::from_slope(Rational::new(23, 2), g).unwrap();
    c.bench_function("extension/case-c", |b| {
        b.iter(|| {
            solve_extension_case(&w, Case::C, SF, c2, &l2, g)
                .unwrap()
                .len()
        })
    });
}

fn sign_laws(c: &mut Criterion) {
    let mut group = c.benchmark_group("sign-law");
    group.sample_size(10);
    for law in SignLaw::ALL {
        group.bench_function(law.id(), |b| {
            b.iter(|| verify_sign_law(law, 1, black_box(6)).pass)
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    enumeration,
    chamber_deck,
    verdicts,
    extension,
    sign_laws
);
criterion_main!(benches);
