// Writes data/tables/<id>.json for every builtin. Transcribed tables are used
// where they exist, otherwise the tube category is exported as presented.
#include <filesystem>
#include <fstream>
#include <iostream>

#include <tubealg/builtins.hpp>
#include <tubealg/io.hpp>

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_tables <output-dir>\n";
    return 1;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  auto write = [&](std::string name, const tubealg::TubePresentation& p) {
    for (char& c : name)
      if (c == ':') c = '_';
    std::ofstream(dir / (name + ".json")) << tubealg::presentation_to_json(p);
  };
  for (const auto& id : tubealg::builtin_ids()) {
    const auto b = tubealg::load_builtin(id);
    tubealg::TubePresentation p = b.reference_tables ? *b.reference_tables : tubealg::to_presentation(b.tube);
    p.name = id;
    write(id, p);
  }
  write("rep-s3.as-printed", tubealg::rep_s3_tables_as_printed());
  return 0;
}
