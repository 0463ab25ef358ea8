#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "weylgpd/cli.hpp"

int main(int argc, char** argv) {
  using namespace weylgpd;
  JobSpec job;
  CLI::App app{"Root systems and Weyl groupoids of Nichols algebras of diagonal type and of "
               "contragredient Lie superalgebras, in exact arithmetic."};
  app.add_option("input", job.input, "Input file ('-' for standard input)")->default_val("-");
  const std::map<std::string, Mode> modes{{"auto", Mode::Auto},         {"nichols", Mode::Nichols},
                                          {"super", Mode::Super},       {"groupoid", Mode::Groupoid},
                                          {"pbw", Mode::Pbw},           {"verify", Mode::Verify}};
  app.add_option("-m,--mode", job.mode,
                 "nichols: roots, heights, dimension; super: roots and sdim; groupoid: objects, "
                 "Coxeter matrices, morphisms; pbw: Lyndon words and hyperwords; verify: check a "
                 "'grs' bundle; auto: chosen from the input header")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case))
      ->default_str("auto");
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}};
  app.add_option("-f,--format", job.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("text");
  app.add_option("--object-cap", job.object_cap, "Abort groupoid enumeration after this many objects")
      ->default_val(kDefaultObjectCap)
      ->check(CLI::PositiveNumber);
  app.add_option("--morphism-cap", job.morphism_cap, "Abort morphism enumeration after this many morphisms")
      ->default_val(kDefaultMorphismCap)
      ->check(CLI::PositiveNumber);
  app.add_flag("--with-pbw", job.with_pbw, "Append Lyndon words and hyperwords to root-system output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }
  return run(job, std::cout, std::cerr);
}
