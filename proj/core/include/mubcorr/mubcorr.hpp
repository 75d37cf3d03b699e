#pragma once

#include "mubcorr/closed_form.hpp"
#include "mubcorr/linalg.hpp"
#include "mubcorr/measures.hpp"
#include "mubcorr/mub.hpp"
#include "mubcorr/optimizer.hpp"
#include "mubcorr/states.hpp"
#include "mubcorr/verify.hpp"
