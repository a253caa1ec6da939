// Every example must run to completion.

macro_rules! example {
    ($name:ident, $file:literal) => {
        #[allow(dead_code)]
        #[path = $file]
        mod $name;

        #[test]
        fn $name() {
            $name::run_example().unwrap();
        }
    };
}

example!(trees, "../examples/trees.rs");
example!(products, "../examples/products.rs");
example!(coproduct, "../examples/coproduct.rs");
example!(primitives, "../examples/primitives.rs");
example!(heap_coefficients, "../examples/heap_coefficients.rs");
example!(operads, "../examples/operads.rs");
example!(reconstruction, "../examples/reconstruction.rs");
