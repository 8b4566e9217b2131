#ifndef SUPERSYM_SUPERSYM_HPP
#define SUPERSYM_SUPERSYM_HPP

#include "scalar.hpp"
#include "profile.hpp"
#include "laurent.hpp"
#include "json_io.hpp"
#include "weights.hpp"
#include "supercharacters.hpp"
#include "generators.hpp"
#include "linear_algebra.hpp"
#include "supersym_algebra.hpp"
#include "campaign.hpp"
#include "text_io.hpp"

#endif
