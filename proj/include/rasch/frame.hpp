// SPDX-License-Identifier: Apache-2.0
//
// ras-channel: EM channel modelling for reconfigurable antenna systems,
// built on spherical vector wave expansions
// Copyright (C) 2026 the ras-channel developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RASCH_FRAME_HPP
#define RASCH_FRAME_HPP

#include "geometry.hpp"
#include "math.hpp"

namespace rasch::oracle
{
    // Rigid map between coordinate frames: p_out = rotation * p_in + translation.
    struct FrameTransform
    {
        Mat3 rotation = Mat3::identity();
        Vec3 translation{};

        Vec3 apply_point(const Vec3 &p) const { return rotation * p + translation; }
        Vec3 apply_vector(const Vec3 &v) const { return rotation * v; }
        CVec3 apply_vector(const CVec3 &v) const { return rotation * v; }

        FrameTransform inverse() const
        {
            FrameTransform inv;
            inv.rotation = rotation.transposed();
            inv.translation = -(inv.rotation * translation);
            return inv;
        }

        // this transform followed by `next`
        FrameTransform then(const FrameTransform &next) const
        {
            FrameTransform out;
            out.rotation = next.rotation * rotation;
            out.translation = next.rotation * translation + next.translation;
            return out;
        }
    };

    namespace detail
    {
        // Coordinate map of one intrinsic frame rotation: components in the
        // rotated frame are R^T times components in the original frame.
        inline FrameTransform frame_rotation(const Mat3 &R)
        {
            FrameTransform t;
            t.rotation = R.transposed();
            return t;
        }

        inline FrameTransform frame_translation_z(double dist)
        {
            FrameTransform t;
            t.translation = Vec3{0.0, 0.0, -dist};
            return t;
        }
    } // namespace detail

    // Composes the elementary frame operations that carry the transmit local
    // frame (z along the transmit normal) into the receive local frame (axes
    // parallel to the global frame, origin at the receiver):
    //   rotate -beta about y, -alpha about z (normal to global z), then
    //   +phi about z, +theta about y (z toward the receiver), translate d
    //   along z, then undo theta and phi.
    // The result maps transmitter-frame coordinates/vectors to the receiver
    // frame.
    inline FrameTransform tx_to_rx_frame(const channel::LinkGeometry &geom)
    {
        using detail::frame_rotation;
        FrameTransform t = frame_rotation(rot_y(-geom.beta));
        t = t.then(frame_rotation(rot_z(-geom.alpha)));
        t = t.then(frame_rotation(rot_z(geom.phi)));
        t = t.then(frame_rotation(rot_y(geom.theta)));
        t = t.then(detail::frame_translation_z(geom.d));
        t = t.then(frame_rotation(rot_y(-geom.theta)));
        t = t.then(frame_rotation(rot_z(-geom.phi)));
        return t;
    }

} // namespace rasch::oracle

#endif
