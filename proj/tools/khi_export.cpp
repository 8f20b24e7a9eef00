// Regenerates the bundled .sik files in data/ from the built-in corpus.
#include "khi/diagram.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "data";
    std::vector<std::string> names = khi::corpus_names();
    for (auto& extra : {"unknot_r2", "unknot_axis_kink_pos", "3_1#3_1",
                        "m9_46#3_1", "3_1_kinks_pos"})
        names.push_back(extra);
    for (auto& name : names) {
        khi::Diagram D = khi::build_named(name);
        std::string file = name;
        for (auto& ch : file)
            if (ch == '#') ch = 's';
        std::ofstream out(dir + "/" + file + ".sik");
        if (!out) {
            std::cerr << "cannot write " << dir << "/" << file << ".sik\n";
            return 1;
        }
        out << khi::serialize_diagram(D);
        std::cout << file << ".sik\n";
    }
    return 0;
}
