#include "hyperwitness/labels.hpp"

#include "hyperwitness/errors.hpp"

namespace hyperwitness {

std::vector<QubitLabel> full_register() {
    return {{Dof::Pi, Party::A}, {Dof::Pi, Party::B}, {Dof::K, Party::A},
            {Dof::K, Party::B},  {Dof::C, Party::A},  {Dof::C, Party::B}};
}

std::vector<QubitLabel> dof_register(Dof dof) {
    return {{dof, Party::A}, {dof, Party::B}};
}

std::string to_string(Dof dof) {
    switch (dof) {
        case Dof::Pi: return "pi";
        case Dof::K: return "k";
        case Dof::C: return "c";
    }
    throw InvalidParameter("unknown DOF");
}

std::string to_string(QubitLabel q) {
    return to_string(q.dof) + (q.party == Party::A ? "_A" : "_B");
}

Dof dof_from_string(const std::string& name) {
    if (name == "pi") return Dof::Pi;
    if (name == "k") return Dof::K;
    if (name == "c") return Dof::C;
    throw InvalidParameter("unknown DOF name: " + name);
}

QubitLabel label_from_string(const std::string& name) {
    auto sep = name.rfind('_');
    if (sep == std::string::npos || sep + 2 != name.size()) {
        throw InvalidParameter("malformed qubit label: " + name);
    }
    Dof dof = dof_from_string(name.substr(0, sep));
    char party = name[sep + 1];
    if (party != 'A' && party != 'B') {
        throw InvalidParameter("malformed qubit label: " + name);
    }
    return {dof, party == 'A' ? Party::A : Party::B};
}

}  // namespace hyperwitness
