use criterion::{criterion_group, criterion_main, Criterion};

use vkr::braid::{BraidWord, SingularBraidWord};
use vkr::exec::set_parallel;
use vkr::homology::{homfly_homology, DegreeWindow, Functor};
use vkr::wallcross::{vassiliev_homology, CubeOptions};

fn homfly(c: &mut Criterion) {
    let w = BraidWord::parse("3: 1 -2 1 -2").unwrap();
    let mut g = c.benchmark_group("figure_eight_homfly");
    g.sample_size(10);
    for (name, par) in [("parallel", true), ("sequential", false)] {
        g.bench_function(name, |b| {
            set_parallel(par);
            b.iter(|| homfly_homology(&w, DegreeWindow::default(), true).unwrap())
        });
    }
    g.finish();
    set_parallel(true);
}

fn cube(c: &mut Criterion) {
    let w = SingularBraidWord::parse("2: 1! 1! 1").unwrap();
    let mut g = c.benchmark_group("two_point_cube");
    g.sample_size(10);
    for (name, par) in [("parallel", true), ("sequential", false)] {
        g.bench_function(name, |b| {
            set_parallel(par);
            b.iter(|| vassiliev_homology(&w, Functor::Homfly, &CubeOptions::default()).unwrap())
        });
    }
    g.finish();
    set_parallel(true);
}

criterion_group!(benches, homfly, cube);
criterion_main!(benches);
