/*
   Copyright 2026 the heckelab developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace heckelab {

enum class Flavor { Star, Diamond };
enum class SystemKind { Rational, Murphy, DiamondKLR, LinearQuiver };
enum class GammaSeed { MurphySeed, KLRSeed };

inline Flavor flavor_of(SystemKind k) {
    return k == SystemKind::DiamondKLR ? Flavor::Diamond : Flavor::Star;
}

std::string kind_name(SystemKind k);
std::string seed_name(GammaSeed g);

class SeparationFailure : public std::domain_error {
   public:
    explicit SeparationFailure(const std::string& what) : std::domain_error(what) {}
};

class ResidueConditionViolated : public std::domain_error {
   public:
    explicit ResidueConditionViolated(const std::string& what) : std::domain_error(what) {}
};

class SystemMismatch : public std::domain_error {
   public:
    SystemMismatch() : std::domain_error("elements belong to different systems") {}
};

class FlavorMismatch : public std::domain_error {
   public:
    FlavorMismatch() : std::domain_error("involution flavor does not match the system") {}
};

}  // namespace heckelab
